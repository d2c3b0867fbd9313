#pragma once

// Instance-by-instance check that D_{2k+1} annihilates the symmetric
// insertion sum
//
//   S = sum_{sigma in S_{2n+1}} Z(a_sigma(0), ..., a_sigma(2n))
//     = +-lambda * sum_{w in C} I(w),
//
// where C is the set of distinct permutations of a and lambda the common
// multiplicity. The global sign and lambda pull through the linear operators
// and are recorded without being multiplied in.
//
// Each operator D_r (r odd, 3 <= r < wt) is checked twice:
//   orbit proof  - every odd encoding of length r + 2 on C is paired with its
//                  phi image, whose subsequence is reversed and whose
//                  quotient is identical;
//   direct sum   - the expansion of D_r over C, simplified only by the
//                  boundary and reversal relations, is empty.
// Both must agree on the set of contributing windows.
//
// Once every D_r vanishes, S^m lies in the kernel of D_{<wt}, which is
// zeta^m(wt) Q; applying the period map gives S in pi^wt Q.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "symins/coaction.hpp"
#include "symins/encodings.hpp"
#include "symins/words.hpp"

namespace symins {

struct InsertionInstance {
  BlockVector a;
  int weight = 0;
  SignedInteger lambda = 1;
  /// (-1)^depth, shared by every word in C.
  SignedInteger sign = 1;
  /// Distinct permutations of a, sorted.
  std::vector<BlockVector> words;

  int n() const noexcept { return a.n(); }
};

inline SignedInteger factorial(int k) {
  if (k < 0 || k > 20) throw PreconditionError("factorial out of int64 range: " + std::to_string(k));
  SignedInteger out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

inline InsertionInstance build_instance(const std::vector<int>& entries) {
  if (entries.size() < 3 || entries.size() % 2 == 0) {
    throw PreconditionError("symmetric insertion needs 2n+1 >= 3 block sizes, got " +
                            std::to_string(entries.size()));
  }
  InsertionInstance inst;
  inst.a = BlockVector(entries);
  inst.weight = weight_of(inst.a);

  std::vector<int> perm = entries;
  std::sort(perm.begin(), perm.end());
  do {
    inst.words.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto count = static_cast<SignedInteger>(inst.words.size());
  inst.lambda = factorial(static_cast<int>(entries.size())) / count;

  inst.sign = sign_of(blockvector_to_composition(inst.a));
  for (const BlockVector& w : inst.words) {
    if (sign_of(blockvector_to_composition(w)) != inst.sign) {
      throw InvariantViolation("depth sign differs across permutations of " + inst.a.to_string());
    }
  }
  return inst;
}

/// Odd r with 3 <= r < wt.
inline std::vector<int> operator_range(const InsertionInstance& inst) {
  std::vector<int> out;
  for (int r = 3; r < inst.weight; r += 2) out.push_back(r);
  return out;
}

/// Outcome of checking one operator D_r.
struct CheckRecord {
  int r = 0;
  /// Candidate windows over all of C, before dropping vanishing ones.
  std::size_t windows = 0;
  std::size_t encodings = 0;
  std::size_t orbits = 0;
  /// Encodings whose phi image is missing from the set.
  std::size_t unpaired = 0;
  /// Orbits whose subsequences are not mutual reverses or whose quotients differ.
  std::size_t orbit_defects = 0;
  /// Windows found by one method but not the other.
  std::size_t window_mismatches = 0;
  TermMultiset residual;
  /// FNV-1a over the sorted encoding list.
  std::uint64_t digest = 0;
  std::vector<std::string> failures;

  bool passed() const {
    return residual.empty() && unpaired == 0 && orbit_defects == 0 && window_mismatches == 0 &&
           encodings == 2 * orbits;
  }
};

namespace detail {

inline void fnv1a(std::uint64_t& h, const std::string& text) {
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  h ^= '\n';
  h *= 0x100000001b3ULL;
}

}  // namespace detail

inline CheckRecord verify_cancellation(const InsertionInstance& inst, int r) {
  if (r % 2 == 0 || r < 3 || r >= inst.weight) {
    throw PreconditionError("D_r is checked for odd 3 <= r < " + std::to_string(inst.weight) +
                            ", got r = " + std::to_string(r));
  }
  CheckRecord rec;
  rec.r = r;
  const auto cut = static_cast<std::size_t>(r);

  // Direct sum over C, remembering which windows contributed.
  std::set<std::pair<BlockVector, std::size_t>> direct_windows;
  for (const BlockVector& w : inst.words) {
    const BinaryWord word = blockvector_to_word(w);
    rec.windows += dr_window_count(word, cut);
    for (const TensorTerm& term : dr_terms(word, cut)) {
      direct_windows.emplace(w, term.window.start);
      rec.residual.add(term);
    }
  }

  // Orbit proof.
  std::set<OddEncoding> pool;
  for (const BlockVector& w : inst.words) {
    for (OddEncoding& e : enumerate_odd_encodings(w, r + 2)) pool.insert(std::move(e));
  }
  rec.encodings = pool.size();

  std::set<std::pair<BlockVector, std::size_t>> encoded_windows;
  rec.digest = 0xcbf29ce484222325ULL;
  for (const OddEncoding& e : pool) {
    encoded_windows.emplace(e.word, e.window().start);
    detail::fnv1a(rec.digest, e.to_string());

    const OddEncoding image = phi(e);
    if (image == e) {
      throw InvariantViolation("phi fixes " + e.to_string());
    }
    if (!pool.contains(image)) {
      ++rec.unpaired;
      rec.failures.push_back("unpaired encoding " + e.to_string() + " -> " + image.to_string());
      continue;
    }
    if (!(e < image)) continue;
    ++rec.orbits;
    const BinaryWord x = subsequence_of(e);
    const BinaryWord y = subsequence_of(image);
    const BinaryWord q = quotient_of(e);
    if (y != x.reversed() || quotient_of(image) != q) {
      ++rec.orbit_defects;
      rec.failures.push_back("orbit defect " + e.to_string() + " / " + image.to_string());
    }
  }

  std::vector<std::pair<BlockVector, std::size_t>> only_one;
  std::set_symmetric_difference(direct_windows.begin(), direct_windows.end(), encoded_windows.begin(),
                                encoded_windows.end(), std::back_inserter(only_one));
  rec.window_mismatches = only_one.size();
  for (const auto& [w, start] : only_one) {
    rec.failures.push_back("window mismatch on " + w.to_string() + " at " + std::to_string(start));
  }

  for (const auto& [key, coefficient] : rec.residual.entries()) {
    rec.failures.push_back("residual " + std::to_string(coefficient) + " * I(" + key.first.to_string() +
                           ") (x) I(" + key.second.to_string() + ")");
  }
  return rec;
}

struct CancellationCertificate {
  BlockVector a;
  int n = 0;
  int weight = 0;
  SignedInteger lambda = 1;
  std::size_t word_count = 0;
  SignedInteger sign = 1;
  std::vector<CheckRecord> checks;
  bool verified = false;
};

/// Checks every D_r with r odd, 3 <= r < wt. `threads` > 1 spreads the
/// operators over worker threads; the result does not depend on it.
inline CancellationCertificate verify_instance(const InsertionInstance& inst, unsigned threads = 1) {
  CancellationCertificate cert;
  cert.a = inst.a;
  cert.n = inst.n();
  cert.weight = inst.weight;
  cert.lambda = inst.lambda;
  cert.word_count = inst.words.size();
  cert.sign = inst.sign;

  const std::vector<int> rs = operator_range(inst);
  cert.checks.resize(rs.size());
  if (threads <= 1 || rs.size() <= 1) {
    for (std::size_t i = 0; i < rs.size(); ++i) cert.checks[i] = verify_cancellation(inst, rs[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(rs.size());
    {
      std::vector<std::jthread> pool;
      const auto workers = std::min<std::size_t>(threads, rs.size());
      for (std::size_t k = 0; k < workers; ++k) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < rs.size(); i = next++) {
            try {
              cert.checks[i] = verify_cancellation(inst, rs[i]);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
    }
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }
  cert.verified = std::all_of(cert.checks.begin(), cert.checks.end(),
                              [](const CheckRecord& c) { return c.passed(); });
  return cert;
}

}  // namespace symins
