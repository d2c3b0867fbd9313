#pragma once

// Owning wrapper around an MPFR number. Every value carries its own binary
// precision; results of binary operations take the larger precision of the
// operands. There is no global precision state.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace symins {

/// Bits needed to hold `digits` decimal digits.
inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

  BigFloat(long value, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, value, MPFR_RNDN); }

  BigFloat(const mpz_class& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }

  BigFloat(const mpq_class& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  BigFloat(const std::string& decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
  }

  BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
  }

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  BigFloat& operator+=(const BigFloat& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  BigFloat& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long k) { return a *= k; }
  friend BigFloat operator/(BigFloat a, long k) { return a /= k; }
  friend BigFloat operator-(BigFloat a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }

  friend BigFloat abs(BigFloat a) { mpfr_abs(a.v_, a.v_, MPFR_RNDN); return a; }

  friend BigFloat pow(const BigFloat& a, unsigned long e) {
    BigFloat out(a.precision());
    mpfr_pow_ui(out.v_, a.v_, e, MPFR_RNDN);
    return out;
  }

  /// 2^-k at the given precision.
  static BigFloat pow2(long k, mpfr_prec_t bits) {
    BigFloat out(1, bits);
    mpfr_mul_2si(out.v_, out.v_, k, MPFR_RNDN);
    return out;
  }

  /// 10^k at the given precision.
  static BigFloat pow10(long k, mpfr_prec_t bits) {
    BigFloat ten(10, bits);
    BigFloat out(bits);
    mpfr_pow_si(out.v_, ten.v_, k, MPFR_RNDN);
    return out;
  }

  /// Largest integer <= value.
  mpz_class floor_integer() const {
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDD);
    return out;
  }

  /// log10 |value| as a double; -inf for zero.
  double log10_abs() const {
    if (is_zero()) return -INFINITY;
    long exponent = 0;
    const double mantissa = mpfr_get_d_2exp(&exponent, v_, MPFR_RNDN);
    return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * 0.30102999566398120;
  }

  /// Fixed-point decimal with `fraction_digits` digits after the point.
  std::string to_fixed(int fraction_digits) const {
    const std::string format = "%." + std::to_string(fraction_digits) + "Rf";
    char* raw = nullptr;
    mpfr_asprintf(&raw, format.c_str(), v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
  }

  /// Scientific notation with `significant` significant digits.
  std::string to_scientific(int significant) const {
    const std::string format = "%." + std::to_string(std::max(significant - 1, 0)) + "Re";
    char* raw = nullptr;
    mpfr_asprintf(&raw, format.c_str(), v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
  }

 private:
  void widen(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

}  // namespace symins
