#pragma once

// High-precision evaluation of multiple zeta values and rational
// reconstruction of ratios S / pi^wt.
//
// Two independent evaluators:
//
//  * eval_mzv_series  - truncated nested sum in long double with a rigorous
//                       tail bound. Slow and low precision; a cross-check.
//  * eval_mzv_fast    - splits the iterated integral over [0, 1] at 1/2:
//
//        I_{0->1}(a_1..a_n) = sum_j I_{0->1/2}(a_1..a_j) I_{1/2->1}(a_{j+1}..a_n)
//
//    and maps the second factor back to [0, 1/2] with t -> 1 - t, which
//    reverses the word and swaps the letters. Every factor is a word starting
//    with dt/(1-t), i.e. a multiple polylogarithm
//
//        Li_{m_1..m_k}(1/2) = sum_{0 < n_1 < ... < n_k} 2^{-n_k} / (n_1^m_1 ... n_k^m_k),
//
//    which converges like 2^{-N}. All terms are positive.

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "symins/bigfloat.hpp"
#include "symins/verifier.hpp"
#include "symins/words.hpp"

namespace symins {

using BigRational = mpq_class;

/// A value with an estimate of its absolute error.
struct HighPrecisionReal {
  BigFloat value;
  /// Decimal digits after the point that are believed correct.
  int digits = 0;
  double error_bound = 0.0;
};

struct NumericsConfig {
  int digits = 60;
  int max_digits = 200;
  mpz_class max_denominator{"1000000000000"};
  int guard_digits = 5;
  int weight_cap = 14;
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Nested-sum oracle

/// Upper bound on sum over k1 < ... < kr with kr > N. Requires a last part >= 2.
inline double series_tail_bound(const Composition& c, long terms) {
  if (c.parts.empty()) return 0.0;
  int ones = 0;
  int larger = 0;
  for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) (c.parts[i] == 1 ? ones : larger)++;
  const int s = c.parts.back();
  const double u = std::log(static_cast<double>(terms));
  // (1 + ln x)^ones / x^s must be decreasing on [N, inf).
  if (ones >= s * (1.0 + u)) return INFINITY;
  const double ce = s - 1.0;
  const double head = std::pow(static_cast<double>(terms), -ce) / ce;
  double integral = head;  // int_N^inf x^-s dx
  for (int j = 1; j <= ones; ++j) integral = std::pow(1.0 + u, j) * head + (j / ce) * integral;
  return std::pow(1.6449340668482264, larger) * integral;
}

inline HighPrecisionReal eval_mzv_series(const Composition& c, long terms) {
  if (terms < 10) throw PreconditionError("series oracle needs at least 10 terms");
  if (!is_admissible(c)) throw PreconditionError("composition (" + c.to_string() + ") is not admissible");
  const std::size_t depth = c.parts.size();
  std::vector<long double> partial(depth + 1, 0.0L);
  partial[0] = 1.0L;
  for (long k = 1; k <= terms; ++k) {
    const long double kk = static_cast<long double>(k);
    for (std::size_t i = depth; i >= 1; --i) {
      partial[i] += partial[i - 1] / std::pow(kk, static_cast<long double>(c.parts[i - 1]));
    }
  }
  const long double sum = partial[depth];
  const double rounding = static_cast<double>(sum) * static_cast<double>(terms) * static_cast<double>(depth) *
                          4.0 * static_cast<double>(LDBL_EPSILON);
  HighPrecisionReal out{BigFloat(128), 0, series_tail_bound(c, terms) + rounding};
  mpfr_set_ld(out.value.get(), sum, MPFR_RNDN);
  out.digits = out.error_bound > 0 ? static_cast<int>(std::floor(-std::log10(out.error_bound))) : 18;
  out.digits = std::clamp(out.digits, 0, 18);
  return out;
}

// ---------------------------------------------------------------------------
// Half-split evaluator

namespace detail {

/// Exponents of a word of the form 1 0^{m_1-1} 1 0^{m_2-1} ...
inline std::vector<int> polylog_indices(const std::vector<Symbol>& letters) {
  std::vector<int> out;
  for (Symbol s : letters) {
    if (s == 1) {
      out.push_back(1);
    } else {
      if (out.empty()) throw InvariantViolation("polylog word must start with 1");
      ++out.back();
    }
  }
  return out;
}

/// Terms needed so that the tail of Li_{...}(1/2) of the given depth is
/// below 2^-bits.
inline long half_series_terms(mpfr_prec_t bits, int depth) {
  long n = static_cast<long>(bits);
  while (static_cast<double>(n) - depth * std::log2(1.0 + std::log(static_cast<double>(n))) - 1.0 <
         static_cast<double>(bits)) {
    n += 8;
  }
  return n;
}

/// Li_{m_1..m_k}(1/2) truncated after `terms` terms.
inline BigFloat polylog_half(const std::vector<int>& indices, long terms, mpfr_prec_t bits) {
  if (indices.empty()) return BigFloat(1, bits);
  const std::size_t depth = indices.size();
  // partial[i] = sum over n_1 < ... < n_i <= n of prod n_j^-m_j
  std::vector<BigFloat> partial(depth, BigFloat(0, bits));
  partial[0] = BigFloat(1, bits);
  BigFloat result(0, bits);
  BigFloat scale(1, bits);  // 2^-n
  BigFloat inverse(bits);
  BigFloat power(bits);
  for (long n = 1; n <= terms; ++n) {
    mpfr_ui_div(inverse.get(), 1, BigFloat(n, bits).get(), MPFR_RNDN);
    mpfr_div_2ui(scale.get(), scale.get(), 1, MPFR_RNDN);
    mpfr_pow_ui(power.get(), inverse.get(), static_cast<unsigned long>(indices[depth - 1]), MPFR_RNDN);
    result += scale * power * partial[depth - 1];
    for (std::size_t i = depth - 1; i >= 1; --i) {
      mpfr_pow_ui(power.get(), inverse.get(), static_cast<unsigned long>(indices[i - 1]), MPFR_RNDN);
      partial[i] += partial[i - 1] * power;
    }
  }
  return result;
}

}  // namespace detail

inline HighPrecisionReal eval_mzv_fast(const Composition& c, int digits, int max_digits = 200) {
  if (digits < 1 || digits > max_digits) {
    throw PreconditionError("requested " + std::to_string(digits) + " digits, cap is " +
                            std::to_string(max_digits));
  }
  const BinaryWord word = composition_to_word(c);
  const mpfr_prec_t bits = bits_for_digits(digits + 15);
  const std::vector<Symbol> interior(word.symbols().begin() + 1, word.symbols().end() - 1);
  const long terms = detail::half_series_terms(bits, static_cast<int>(interior.size()));

  BigFloat total(0, bits);
  for (std::size_t j = 0; j <= interior.size(); ++j) {
    const std::vector<Symbol> head(interior.begin(), interior.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<Symbol> tail;
    for (std::size_t i = interior.size(); i > j; --i) tail.push_back(static_cast<Symbol>(1 - interior[i - 1]));
    total += detail::polylog_half(detail::polylog_indices(head), terms, bits) *
             detail::polylog_half(detail::polylog_indices(tail), terms, bits);
  }
  return HighPrecisionReal{std::move(total), digits, std::pow(10.0, -(digits + 5))};
}

// ---------------------------------------------------------------------------
// Euler's evaluation of zeta(2k)

/// B_0 .. B_count-1 with B_1 = -1/2.
inline std::vector<BigRational> bernoulli_numbers(int count) {
  std::vector<BigRational> b;
  b.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    if (m == 0) {
      b.emplace_back(1);
      continue;
    }
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    BigRational acc = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += binom * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    BigRational bm = -acc / (m + 1);
    bm.canonicalize();
    b.push_back(bm);
  }
  return b;
}

inline mpz_class factorial_big(int k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

inline mpz_class binomial_big(int top, int bottom) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

/// zeta(2k) / pi^{2k} = (-1)^{k+1} B_2k 2^{2k} / (2 (2k)!).
inline BigRational zeta_even_pi_ratio(int k) {
  if (k < 1) throw PreconditionError("zeta(2k) needs k >= 1");
  const BigRational b2k = bernoulli_numbers(2 * k + 1)[static_cast<std::size_t>(2 * k)];
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
  BigRational out = b2k * two_pow / (2 * factorial_big(2 * k));
  if (k % 2 == 0) out = -out;
  out.canonicalize();
  return out;
}

inline HighPrecisionReal euler_zeta_even(int k, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits + 15);
  BigFloat value = BigFloat(zeta_even_pi_ratio(k), bits) * pow(BigFloat::pi(bits), static_cast<unsigned long>(2 * k));
  return HighPrecisionReal{std::move(value), digits, std::pow(10.0, -(digits + 10))};
}

// ---------------------------------------------------------------------------
// Rational reconstruction

/// Continued-fraction convergent p/q of x with q <= max_denominator and
/// |x - p/q| < 10^-(digits_trusted - guard); nullopt when none exists.
inline std::optional<BigRational> reconstruct_rational(const BigFloat& x, int digits_trusted,
                                                       const mpz_class& max_denominator, int guard = 5) {
  if (digits_trusted < 20) throw PreconditionError("rational reconstruction needs >= 20 trusted digits");
  const mpfr_prec_t bits = std::max(x.precision(), bits_for_digits(digits_trusted + 10));
  const BigFloat tolerance = BigFloat::pow10(-(digits_trusted - guard), bits);
  const bool negative = x.sign() < 0;
  BigFloat target = abs(x);
  BigFloat y = target;

  mpz_class p_prev = 1, p_prev2 = 0;
  mpz_class q_prev = 0, q_prev2 = 1;
  for (int iteration = 0; iteration < 4 * bits; ++iteration) {
    const mpz_class a = y.floor_integer();
    const mpz_class p = a * p_prev + p_prev2;
    const mpz_class q = a * q_prev + q_prev2;
    if (q > max_denominator) return std::nullopt;
    // |x q - p| < tol q
    BigFloat gap = abs(target * BigFloat(q, bits) - BigFloat(p, bits));
    if (gap < tolerance * BigFloat(q, bits)) {
      BigRational out(negative ? mpz_class(-p) : p, q);
      out.canonicalize();
      return out;
    }
    BigFloat fraction = y - BigFloat(a, bits);
    if (fraction.is_zero()) return std::nullopt;
    y = BigFloat(1, bits) / fraction;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Identity checks

enum class ReportStatus { verified_rational, conjectural_match, no_reconstruction };

inline const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::verified_rational: return "verified-rational";
    case ReportStatus::conjectural_match: return "conjectural-match";
    case ReportStatus::no_reconstruction: return "no-reconstruction";
  }
  return "unknown";
}

struct NumericReport {
  std::string family;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::vector<int>> a;
  int weight = 0;
  int digits = 0;
  /// The evaluated sum S.
  BigFloat value;
  /// S / pi^weight.
  BigFloat ratio;
  int pi_power = 0;
  std::optional<BigRational> reconstructed;
  /// Closed form the family is compared against, when it has one.
  std::optional<BigRational> prediction;
  /// "theorem", "conjecture", "certificate" or "unconditional-numeric".
  std::string basis;
  ReportStatus status = ReportStatus::no_reconstruction;

  bool matches_prediction() const { return reconstructed && prediction && *reconstructed == *prediction; }
};

/// Z(b) for a block vector.
inline HighPrecisionReal eval_block_vector(const BlockVector& b, int digits, int max_digits = 200) {
  return eval_mzv_fast(blockvector_to_composition(b), digits, max_digits);
}

namespace detail {

/// sum_i multiplicity_i * Z(words_i), evaluated in parallel when asked.
inline BigFloat weighted_block_sum(const std::vector<BlockVector>& words, const std::vector<long>& multiplicity,
                                   const NumericsConfig& cfg) {
  const int work_digits = cfg.digits + cfg.guard_digits + 5;
  const mpfr_prec_t bits = bits_for_digits(work_digits + 15);
  std::vector<BigFloat> values(words.size(), BigFloat(bits));
  std::vector<std::exception_ptr> errors(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < words.size(); i = next++) {
      try {
        values[i] = eval_block_vector(words[i], work_digits, std::max(cfg.max_digits, work_digits)).value;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(cfg.threads, words.size()));
    for (std::size_t k = 1; k < workers; ++k) pool.emplace_back(worker);
    worker();
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  BigFloat total(0, bits);
  for (std::size_t i = 0; i < words.size(); ++i) total += values[i] * multiplicity[i];
  return total;
}

inline void check_digits(const NumericsConfig& cfg) {
  if (cfg.digits < 20) throw PreconditionError("numeric checks need at least 20 digits");
  if (cfg.digits > cfg.max_digits) {
    throw PreconditionError("requested " + std::to_string(cfg.digits) + " digits, cap is " +
                            std::to_string(cfg.max_digits));
  }
}

inline void check_weight(int weight, const NumericsConfig& cfg) {
  if (weight > cfg.weight_cap) {
    throw PreconditionError("weight " + std::to_string(weight) + " exceeds the weight cap " +
                            std::to_string(cfg.weight_cap));
  }
}

/// Fills value, ratio and reconstructed.
inline void finish_report(NumericReport& report, BigFloat sum, const NumericsConfig& cfg) {
  const mpfr_prec_t bits = sum.precision();
  report.digits = cfg.digits;
  report.pi_power = report.weight;
  report.ratio = sum / pow(BigFloat::pi(bits), static_cast<unsigned long>(report.weight));
  report.value = std::move(sum);
  report.reconstructed = reconstruct_rational(report.ratio, cfg.digits, cfg.max_denominator, cfg.guard_digits);
}

inline BigRational over_factorial(const mpz_class& numerator, const mpz_class& denominator) {
  BigRational out(numerator, denominator);
  out.canonicalize();
  return out;
}

}  // namespace detail

/// S = sum over all sigma in S_{2n+1} of Z(a_sigma), i.e. lambda * sum over C.
/// Pass the verifier's certificate to mark the rationality as proven.
inline NumericReport check_symmetric_sum(const std::vector<int>& a, const NumericsConfig& cfg = {},
                                         const CancellationCertificate* certificate = nullptr) {
  detail::check_digits(cfg);
  const InsertionInstance inst = build_instance(a);
  detail::check_weight(inst.weight, cfg);
  NumericReport report;
  report.family = "symmetric";
  report.a = a;
  report.n = inst.n();
  report.weight = inst.weight;
  report.basis = certificate && certificate->verified && certificate->a == inst.a ? "certificate"
                                                                                 : "unconditional-numeric";
  const std::vector<long> mult(inst.words.size(), static_cast<long>(inst.lambda));
  detail::finish_report(report, detail::weighted_block_sum(inst.words, mult, cfg), cfg);
  // Cyclic insertion would give (2n)! / (wt+1)!.
  report.prediction = detail::over_factorial(factorial_big(2 * inst.n()), factorial_big(inst.weight + 1));
  report.status = report.reconstructed ? ReportStatus::verified_rational : ReportStatus::no_reconstruction;
  return report;
}

/// zeta({{2}^m, 1, {2}^m, 3}^n, {2}^m) against 1 / ((2n+1) (wt+1)!).
inline NumericReport check_bbbl_family(int n, int m, const NumericsConfig& cfg = {}) {
  detail::check_digits(cfg);
  if (n < 0 || m < 0) throw PreconditionError("n and m must be non-negative");
  const BlockVector b(std::vector<int>(static_cast<std::size_t>(2 * n + 1), m));
  NumericReport report;
  report.family = "bbbl";
  report.n = n;
  report.m = m;
  report.weight = weight_of(b);
  if (report.weight < 2) throw PreconditionError("family member has weight 0");
  detail::check_weight(report.weight, cfg);
  report.basis = "conjecture";
  detail::finish_report(report, detail::weighted_block_sum({b}, {1L}, cfg), cfg);
  report.prediction = detail::over_factorial(1, (2 * n + 1) * factorial_big(report.weight + 1));
  if (!report.reconstructed) {
    report.status = ReportStatus::no_reconstruction;
  } else {
    report.status = report.matches_prediction() ? ReportStatus::conjectural_match : ReportStatus::verified_rational;
  }
  return report;
}

/// All weak compositions of `total` into `parts` parts, lexicographic order.
inline std::vector<std::vector<int>> weak_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  auto fill = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      current[static_cast<std::size_t>(index)] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[static_cast<std::size_t>(index)] = v;
      self(self, index + 1, remaining - v);
    }
  };
  if (parts > 0) fill(fill, 0, total);
  return out;
}

/// sum of Z over all weak compositions of m into 2n+1 parts against
/// binomial(m+2n, m) / ((2n+1) (wt+1)!).
inline NumericReport check_bowman_bradley(int n, int m, const NumericsConfig& cfg = {}) {
  detail::check_digits(cfg);
  if (n < 0 || m < 0) throw PreconditionError("n and m must be non-negative");
  NumericReport report;
  report.family = "bowman-bradley";
  report.n = n;
  report.m = m;
  report.weight = 4 * n + 2 * m;
  if (report.weight < 2) throw PreconditionError("family member has weight 0");
  detail::check_weight(report.weight, cfg);
  report.basis = "theorem";
  std::vector<BlockVector> words;
  for (auto& j : weak_compositions(m, 2 * n + 1)) words.emplace_back(std::move(j));
  detail::finish_report(report, detail::weighted_block_sum(words, std::vector<long>(words.size(), 1L), cfg), cfg);
  report.prediction = detail::over_factorial(binomial_big(m + 2 * n, m), (2 * n + 1) * factorial_big(report.weight + 1));
  report.status = report.reconstructed ? ReportStatus::verified_rational : ReportStatus::no_reconstruction;
  return report;
}

/// sum of Z over the 2n+1 cyclic shifts of a against 1 / (wt+1)!. Only a
/// match with that value counts; rationality of the cyclic sum is unproven.
inline NumericReport check_cyclic_insertion(const std::vector<int>& a, const NumericsConfig& cfg = {}) {
  detail::check_digits(cfg);
  const BlockVector base(a);
  NumericReport report;
  report.family = "cyclic";
  report.a = a;
  report.n = base.n();
  report.weight = weight_of(base);
  if (report.weight < 2) throw PreconditionError("family member has weight 0");
  detail::check_weight(report.weight, cfg);
  report.basis = "conjecture";
  std::vector<BlockVector> shifts;
  std::vector<int> current = a;
  for (std::size_t k = 0; k < a.size(); ++k) {
    shifts.emplace_back(current);
    std::rotate(current.begin(), current.begin() + 1, current.end());
  }
  detail::finish_report(report, detail::weighted_block_sum(shifts, std::vector<long>(shifts.size(), 1L), cfg), cfg);
  report.prediction = detail::over_factorial(1, factorial_big(report.weight + 1));
  report.status = report.matches_prediction() ? ReportStatus::conjectural_match : ReportStatus::no_reconstruction;
  return report;
}

}  // namespace symins
