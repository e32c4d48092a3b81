#pragma once

#include <complex>
#include <string>

#include "varkit/bigfloat.hpp"

namespace varkit {

/// Complex number with BigFloat components.
///
/// The static out-parameter operations are the allocation-free fast path used
/// by the recursion kernels; `out` must not alias either input there.
class BigComplex {
public:
  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  BigComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(std::complex<double> z, mpfr_prec_t prec)
      : re_(z.real(), prec), im_(z.imag(), prec) {}

  static BigComplex zero(mpfr_prec_t prec) { return BigComplex(prec); }
  static BigComplex one(mpfr_prec_t prec) { return BigComplex(1.0, 0.0, prec); }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }

  mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
  void reset(mpfr_prec_t prec) {
    re_.reset(prec);
    im_.reset(prec);
  }

  /// Rounds a copy to the given precision.
  BigComplex rounded(mpfr_prec_t prec) const {
    BigComplex r(prec);
    mpfr_set(r.re_.raw(), re_.raw(), MPFR_RNDN);
    mpfr_set(r.im_.raw(), im_.raw(), MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  std::complex<double> to_complex_double() const {
    return {re_.to_double(), im_.to_double()};
  }

  BigFloat abs() const { return hypot(re_, im_); }
  /// |z|^2.
  BigFloat norm() const {
    BigFloat r(prec());
    mpfr_fmma(r.raw(), re_.raw(), re_.raw(), im_.raw(), im_.raw(), MPFR_RNDN);
    return r;
  }
  /// Principal argument in (-pi, pi].
  BigFloat arg() const {
    BigFloat r(prec());
    mpfr_atan2(r.raw(), im_.raw(), re_.raw(), MPFR_RNDN);
    return r;
  }
  BigComplex conj() const {
    BigComplex r(*this);
    r.im_.negate();
    return r;
  }

  void negate() {
    re_.negate();
    im_.negate();
  }
  /// Multiplies by 2^e in place (exact).
  void scale_2exp(long e) {
    re_.scale_2exp(e);
    im_.scale_2exp(e);
  }

  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(double d) {
    re_ *= d;
    im_ *= d;
    return *this;
  }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend BigComplex operator-(const BigComplex& a) {
    BigComplex r(a);
    r.negate();
    return r;
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    BigComplex r(a.prec() > b.prec() ? a.prec() : b.prec());
    mul(r, a, b);
    return r;
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigComplex r(a.prec() > b.prec() ? a.prec() : b.prec());
    div(r, a, b);
    return r;
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
    return BigComplex(a.re_ * s, a.im_ * s);
  }
  friend BigComplex operator*(const BigComplex& a, double d) {
    BigComplex r(a);
    r *= d;
    return r;
  }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

  /// out = a * b; out must not alias a or b.
  static void mul(BigComplex& out, const BigComplex& a, const BigComplex& b) {
    mpfr_fmms(out.re_.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_fmma(out.im_.raw(), a.re_.raw(), b.im_.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
  }
  /// out = a / b; out must not alias a or b.
  static void div(BigComplex& out, const BigComplex& a, const BigComplex& b) {
    BigFloat n(out.prec());
    mpfr_fmma(n.raw(), b.re_.raw(), b.re_.raw(), b.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_fmma(out.re_.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_fmms(out.im_.raw(), a.im_.raw(), b.re_.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_div(out.re_.raw(), out.re_.raw(), n.raw(), MPFR_RNDN);
    mpfr_div(out.im_.raw(), out.im_.raw(), n.raw(), MPFR_RNDN);
  }
  /// acc += a * b via a scratch slot; scratch must not alias acc, a or b.
  static void mul_acc(BigComplex& acc, const BigComplex& a, const BigComplex& b,
                      BigComplex& scratch) {
    mul(scratch, a, b);
    acc += scratch;
  }

  /// sin z and cos z for complex arguments.
  static BigComplex sin(const BigComplex& z);
  static BigComplex cos(const BigComplex& z);

  std::string to_string() const { return re_.to_string() + " " + im_.to_string(); }

private:
  BigFloat re_;
  BigFloat im_;
};

}  // namespace varkit
