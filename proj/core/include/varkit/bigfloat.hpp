#pragma once

#include <cstdarg>
#include <cstdio>
#include <mpfr.h>

#include <string>
#include <utility>

#include "varkit/errors.hpp"

namespace varkit {

/// Default working precision (bits) for divided-difference tables.
inline constexpr mpfr_prec_t kDefaultPrecision = 128;
/// Precision (bits) at which variety nodes are stored.
inline constexpr mpfr_prec_t kStoragePrecision = 256;
/// Smallest precision the library accepts.
inline constexpr mpfr_prec_t kMinPrecision = 64;

/// Arbitrary-precision binary floating point value with value semantics.
///
/// All operations round to nearest.  Binary operators allocate the result at
/// the larger of the two operand precisions; the in-place operators and the
/// explicit `*_inplace` helpers keep the precision of their target, which is
/// what the hot loops rely on to stay allocation-free.
class BigFloat {
public:
  BigFloat() {
    mpfr_init2(v_, kDefaultPrecision);
    mpfr_set_zero(v_, 1);
  }
  explicit BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  /// Parses a decimal string at the given precision.
  static BigFloat parse(const std::string& text, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
      throw ParseError("invalid number: '" + text + "'");
    return r;
  }

  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  static BigFloat factorial(unsigned long n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_fac_ui(r.v_, n, MPFR_RNDN);
    return r;
  }

  /// 2^e at the given precision (exact).
  static BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat r(1.0, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  /// Resets the value to zero at a new precision.
  void reset(mpfr_prec_t prec) {
    mpfr_set_prec(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  BigFloat& operator=(double d) {
    mpfr_set_d(v_, d, MPFR_RNDN);
    return *this;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  /// Exponent e with 2^(e-1) <= |x| < 2^e; only meaningful for nonzero finite values.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const BigFloat& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(double d) {
    mpfr_mul_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator+=(double d) {
    mpfr_add_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }

  void negate() { mpfr_neg(v_, v_, MPFR_RNDN); }
  /// Multiplies by 2^e in place (exact).
  void scale_2exp(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(res_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(res_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(res_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(res_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, double d) {
    BigFloat r(a.prec());
    mpfr_mul_d(r.v_, a.v_, d, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, double d) { return mpfr_cmp_d(a.v_, d) < 0; }
  friend bool operator<=(const BigFloat& a, double d) { return mpfr_cmp_d(a.v_, d) <= 0; }
  friend bool operator>(const BigFloat& a, double d) { return mpfr_cmp_d(a.v_, d) > 0; }
  friend bool operator>=(const BigFloat& a, double d) { return mpfr_cmp_d(a.v_, d) >= 0; }
  friend bool operator==(const BigFloat& a, double d) { return mpfr_cmp_d(a.v_, d) == 0; }

  /// Exact three-way comparison: negative, zero or positive as a <,==,> b.
  static int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat exp(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(res_prec(a, b));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

  /// Scientific-notation decimal string that round-trips at this precision.
  std::string to_string() const {
    size_t digits = mpfr_get_str_ndigits(10, prec());
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits - 1), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

private:
  static mpfr_prec_t res_prec(const BigFloat& a, const BigFloat& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
  }
  mpfr_t v_;
};

}  // namespace varkit
