// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "symins/symins.hpp"

using namespace symins;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

constexpr int kDigits = 40;

std::vector<std::vector<int>> instance_set() {
  std::vector<std::vector<int>> out;
  for (const auto& a : oracle::small_block_vectors(2, 4)) {
    int sum = 0;
    for (int x : a) sum += x;
    if (a.size() == 3 || sum <= 2) out.push_back(a);
  }
  return out;
}

Outcome symbolic_verification() {
  std::size_t instances = 0, checks = 0, failed = 0;
  for (const auto& a : instance_set()) {
    const CancellationCertificate cert = verify_instance(build_instance(a), 4);
    ++instances;
    checks += cert.checks.size();
    bool ok = cert.verified;
    for (const auto& rec : cert.checks) ok = ok && rec.residual.empty();
    const int wt = weight_of(BlockVector(a));
    ok = ok && cert.checks.size() == static_cast<std::size_t>((wt - 2) / 2);
    if (!ok) ++failed;
  }
  std::ostringstream d;
  d << instances << " instances, " << checks << " operator checks, " << failed << " failed";
  return {failed == 0, d.str()};
}

Outcome oracle_equivalence() {
  std::size_t words = 0, compared = 0, mismatches = 0;
  for (const auto& a : instance_set()) {
    for (const BlockVector& b : build_instance(a).words) {
      ++words;
      const std::string text = oracle::word_by_hand(b.entries());
      for (int len = 3; len <= weight_of(b) + 1; len += 2) {
        std::set<std::size_t> found;
        for (const OddEncoding& e : enumerate_odd_encodings(b, len)) found.insert(e.window().start);
        const auto expected = oracle::nontrivial_window_starts(text, static_cast<std::size_t>(len));
        std::vector<std::size_t> diff;
        std::set_symmetric_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                                      std::back_inserter(diff));
        mismatches += diff.size();
        compared += expected.size();
      }
    }
  }
  std::ostringstream d;
  d << words << " words, " << compared << " windows, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome involution_properties() {
  std::mt19937_64 rng(20240601);
  constexpr int kSamples = 20000;
  int violations = 0;
  for (int sample = 0; sample < kSamples; ++sample) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<int> entries(static_cast<std::size_t>(2 * n + 1));
    for (int& x : entries) x = static_cast<int>(rng() % 6);
    const BlockVector b(entries);
    auto block = [&](int i) { return 2 * (entries[static_cast<std::size_t>(i)] + 1); };

    // Draw s < t of opposite parity and l, m of opposite parity.
    int s = 0, t = 0, l = 0, m = 0;
    do {
      s = static_cast<int>(rng() % entries.size());
      t = static_cast<int>(rng() % entries.size());
    } while (s >= t || (t - s) % 2 == 0);
    do {
      l = static_cast<int>(rng() % static_cast<unsigned>(block(s)));
      m = static_cast<int>(rng() % static_cast<unsigned>(block(t)));
    } while ((l + m) % 2 == 0);
    const OddEncoding e{b, s, l, t, m};

    int offset = 0, span = 0;
    for (int i = 0; i < s; ++i) offset += block(i);
    for (int i = s; i <= t; ++i) span += block(i);
    const int len = span - l - m;
    const std::size_t start = static_cast<std::size_t>(offset + l);
    const std::string text = oracle::word_by_hand(entries);
    const std::string sub = text.substr(start, static_cast<std::size_t>(len));
    const std::string quotient = text.substr(0, start + 1) + text.substr(start + static_cast<std::size_t>(len) - 1);

    const OddEncoding image = phi(e);
    bool ok = is_valid(e) && is_valid(image);
    ok = ok && e.length() == len && subsequence_of(e).to_string() == sub;
    ok = ok && phi(image) == e;
    ok = ok && image.length() == e.length();
    ok = ok && !(image == e);
    ok = ok && subsequence_of(image).to_string() == oracle::reverse_of(sub);
    ok = ok && quotient_of(e).to_string() == quotient && quotient_of(image) == quotient_of(e);
    if (!ok) ++violations;
  }
  std::ostringstream d;
  d << kSamples << " random encodings, " << violations << " violations";
  return {violations == 0, d.str()};
}

Outcome negative_control() {
  std::size_t trials = 0, caught = 0;
  for (const std::vector<int>& a : {std::vector<int>{1, 0, 0}, {2, 1, 0}, {1, 1, 0, 0, 0}, {2, 0, 0, 0, 0}}) {
    const InsertionInstance full = build_instance(a);
    if (full.words.size() < 3) continue;
    for (std::size_t drop = 0; drop < full.words.size(); ++drop) {
      InsertionInstance broken = full;
      broken.words.erase(broken.words.begin() + static_cast<std::ptrdiff_t>(drop));
      const CancellationCertificate cert = verify_instance(broken, 4);
      bool residual = false;
      for (const auto& rec : cert.checks) residual = residual || !rec.residual.empty();
      ++trials;
      if (!cert.verified && residual) ++caught;
    }
  }
  std::ostringstream d;
  d << caught << "/" << trials << " single-word deletions detected";
  return {trials > 0 && caught == trials, d.str()};
}

NumericsConfig config() {
  NumericsConfig cfg;
  cfg.digits = kDigits;
  cfg.threads = 4;
  return cfg;
}

/// Digits to which value agrees with q * pi^weight.
double raw_agreement(const NumericReport& r, const BigRational& q) {
  const BigFloat exact = BigFloat(q, r.value.precision()) *
                         pow(BigFloat::pi(r.value.precision()), static_cast<unsigned long>(r.weight));
  return -abs(r.value - exact).log10_abs();
}

bool exact(const NumericReport& r, const BigRational& q, std::ostringstream& d) {
  const double digits = raw_agreement(r, q);
  const bool ok = r.reconstructed && *r.reconstructed == q && digits >= 35.0;
  d << r.family << "(";
  if (r.m) {
    d << "n=" << *r.n << ",m=" << *r.m;
  } else {
    d << BlockVector(r.a.value_or(std::vector<int>{0})).to_string();
  }
  d << ")="
    << (r.reconstructed ? r.reconstructed->get_str() : std::string("none")) << " ";
  return ok;
}

Outcome numeric_identities() {
  std::ostringstream d;
  bool ok = exact(check_bbbl_family(1, 0, config()), BigRational(1, 360), d);
  ok = exact(check_bowman_bradley(1, 1, config()), BigRational(1, 5040), d) && ok;
  BigRational two_over_9(2, 362880);
  two_over_9.canonicalize();
  ok = exact(check_bowman_bradley(1, 2, config()), two_over_9, d) && ok;
  double worst = 1e9;
  for (int k = 1; k <= 5; ++k) {
    const HighPrecisionReal euler = euler_zeta_even(k, kDigits);
    const HighPrecisionReal fast = eval_mzv_fast(Composition{{2 * k}}, kDigits);
    worst = std::min(worst, -abs(euler.value - fast.value).log10_abs());
  }
  ok = ok && worst >= kDigits;
  d << "euler k<=5 agreement >= " << static_cast<int>(std::min(worst, 999.0)) << " digits";
  return {ok, d.str()};
}

Outcome conjectural_confirmations() {
  std::ostringstream d;
  const NumericReport a = check_bbbl_family(1, 1, config());
  const NumericReport b = check_bbbl_family(2, 0, config());
  const NumericReport c = check_cyclic_insertion({1, 0, 0}, config());
  bool ok = exact(a, BigRational(1, 3 * 39916800L), d);
  ok = exact(b, BigRational(1, 5 * 362880L), d) && ok;
  ok = exact(c, BigRational(1, 5040), d) && ok;
  for (const NumericReport* r : {&a, &b, &c}) ok = ok && r->status == ReportStatus::conjectural_match;
  d << "status " << to_string(a.status) << "/" << to_string(b.status) << "/" << to_string(c.status);
  return {ok, d.str()};
}

Outcome symmetric_rationality() {
  std::ostringstream d;
  bool ok = true;
  for (const std::vector<int>& a : {std::vector<int>{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}) {
    const NumericReport r = check_symmetric_sum(a, config());
    const bool got = r.reconstructed && r.reconstructed->get_den() <= mpz_class("1000000000000");
    ok = ok && got;
    d << BlockVector(a).to_string() << " -> " << (got ? r.reconstructed->get_str() : std::string("none")) << " ";
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 symbolic verification", symbolic_verification},
      {"AC2 oracle equivalence", oracle_equivalence},
      {"AC3 involution properties", involution_properties},
      {"AC4 negative control", negative_control},
      {"AC5 numeric identities", numeric_identities},
      {"AC6 conjectural confirmations", conjectural_confirmations},
      {"AC7 symmetric-sum rationality", symmetric_rationality},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (!outcome.pass) ++failures;
    std::printf("%s %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
