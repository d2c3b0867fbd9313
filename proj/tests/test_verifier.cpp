#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symins/serialize.hpp"
#include "symins/verifier.hpp"

namespace symins {
namespace {

TEST(Verifier, BuildInstance) {
  const InsertionInstance one = build_instance({1, 0, 0});
  EXPECT_EQ(one.words, (std::vector<BlockVector>{BlockVector({0, 0, 1}), BlockVector({0, 1, 0}),
                                                 BlockVector({1, 0, 0})}));
  EXPECT_EQ(one.lambda, 2);
  EXPECT_EQ(one.weight, 6);
  EXPECT_EQ(one.sign, -1);

  const InsertionInstance constant = build_instance({2, 2, 2});
  EXPECT_EQ(constant.words.size(), 1u);
  EXPECT_EQ(constant.lambda, 6);

  const InsertionInstance distinct = build_instance({2, 1, 0});
  EXPECT_EQ(distinct.words.size(), 6u);
  EXPECT_EQ(distinct.lambda, 1);

  const InsertionInstance five = build_instance({2, 1, 1, 0, 0});
  EXPECT_EQ(five.lambda * static_cast<SignedInteger>(five.words.size()), 120);
}

TEST(Verifier, BuildInstanceRejectsEvenLength) {
  EXPECT_THROW(build_instance({0, 0}), PreconditionError);
  EXPECT_THROW(build_instance({0}), PreconditionError);
  EXPECT_THROW(build_instance({1, -1, 0}), PreconditionError);
}

TEST(Verifier, ZetaOneThree) {
  const CancellationCertificate cert = verify_instance(build_instance({0, 0, 0}));
  EXPECT_TRUE(cert.verified);
  ASSERT_EQ(cert.checks.size(), 1u);
  EXPECT_EQ(cert.checks[0].r, 3);
  EXPECT_EQ(cert.checks[0].encodings, 0u);
  EXPECT_EQ(cert.checks[0].windows, 2u);
}

TEST(Verifier, OneZeroZero) {
  const InsertionInstance inst = build_instance({1, 0, 0});
  for (int r : {3, 5}) {
    const CheckRecord rec = verify_cancellation(inst, r);
    EXPECT_TRUE(rec.passed()) << "r=" << r;
    EXPECT_TRUE(rec.residual.empty());
    EXPECT_EQ(rec.encodings, 2 * rec.orbits);
  }
  // Word length 8, r=3: four windows per word.
  EXPECT_EQ(verify_cancellation(inst, 3).windows, 12u);
  EXPECT_THROW(verify_cancellation(inst, 4), PreconditionError);
  EXPECT_THROW(verify_cancellation(inst, 7), PreconditionError);
  EXPECT_THROW(verify_cancellation(inst, 1), PreconditionError);
}

TEST(Verifier, ConstantVectors) {
  const CancellationCertificate cert = verify_instance(build_instance({1, 1, 1}));
  EXPECT_TRUE(cert.verified);
  std::vector<int> rs;
  for (const auto& c : cert.checks) rs.push_back(c.r);
  EXPECT_EQ(rs, (std::vector<int>{3, 5, 7, 9}));

  const CancellationCertificate n2 = verify_instance(build_instance({0, 0, 0, 0, 0}));
  EXPECT_TRUE(n2.verified);
  EXPECT_EQ(n2.weight, 8);
  EXPECT_EQ(n2.checks.size(), 3u);
}

TEST(Verifier, ThreadsDoNotChangeResult) {
  const InsertionInstance inst = build_instance({2, 1, 0});
  const auto serial = to_json(verify_instance(inst, 1)).dump();
  const auto parallel = to_json(verify_instance(inst, 4)).dump();
  EXPECT_EQ(serial, parallel);
}

// Both methods succeed and find the same windows on every small instance.
TEST(Verifier, OrbitProofAgreesWithDirectSum) {
  for (const auto& a : oracle::small_block_vectors(2, 4)) {
    const CancellationCertificate cert = verify_instance(build_instance(a));
    EXPECT_TRUE(cert.verified) << cert.a.to_string();
    for (const CheckRecord& rec : cert.checks) {
      EXPECT_EQ(rec.window_mismatches, 0u);
      EXPECT_EQ(rec.unpaired, 0u);
      EXPECT_EQ(rec.orbit_defects, 0u);
    }
  }
}

TEST(Verifier, DroppingAWordBreaksCancellation) {
  for (const std::vector<int>& a : {std::vector<int>{1, 0, 0}, {2, 1, 0}, {1, 1, 0, 0, 0}}) {
    const InsertionInstance full = build_instance(a);
    for (std::size_t drop = 0; drop < full.words.size(); ++drop) {
      InsertionInstance broken = full;
      broken.words.erase(broken.words.begin() + static_cast<std::ptrdiff_t>(drop));
      const CancellationCertificate cert = verify_instance(broken);
      EXPECT_FALSE(cert.verified);
      bool residual = false;
      for (const auto& rec : cert.checks) residual = residual || !rec.residual.empty();
      EXPECT_TRUE(residual) << "dropped " << full.words[drop].to_string();
    }
  }
}

TEST(Verifier, CertificateJson) {
  const CancellationCertificate cert = verify_instance(build_instance({1, 0, 0}));
  const ordered_json j = to_json(cert);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"version", "a", "n", "weight", "lambda", "word_count", "sign",
                                            "checks", "verdict", "conclusion"}));
  EXPECT_EQ(j["version"], "cert-v1");
  EXPECT_EQ(j["lambda"], 2);
  EXPECT_EQ(j["word_count"], 3);
  EXPECT_EQ(j["verdict"], "verified");
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][0]["r"], 3);
  EXPECT_EQ(j["checks"][0]["residual"], 0);
  EXPECT_FALSE(j["checks"][0].contains("failures"));
  EXPECT_EQ(j.dump(), to_json(verify_instance(build_instance({1, 0, 0}))).dump());
}

TEST(Verifier, FailedCertificateListsResiduals) {
  InsertionInstance broken = build_instance({1, 0, 0});
  broken.words.pop_back();
  const ordered_json j = to_json(verify_instance(broken));
  EXPECT_EQ(j["verdict"], "failed");
  EXPECT_TRUE(j["checks"][0].contains("failures"));
  EXPECT_GT(j["checks"][0]["residual"].get<int>(), 0);
}

}  // namespace
}  // namespace symins
