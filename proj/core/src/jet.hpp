#pragma once

// Internal truncated-Taylor ("jet") arithmetic used by the divided-difference
// routines.  A jet of order L is the vector of coefficients of 1, t, ..., t^L;
// all entries share one precision.  Not installed.

#include <vector>

#include "varkit/bigcomplex.hpp"
#include "varkit/errors.hpp"

namespace varkit::detail {

using Jet = std::vector<BigComplex>;

inline Jet make_jet(int order, mpfr_prec_t prec) {
  return Jet(static_cast<size_t>(order + 1), BigComplex(prec));
}

inline void jet_zero(Jet& a) {
  for (auto& c : a) c.reset(c.prec());
}

/// out := a * b truncated to the order of out.  out must not alias a or b.
inline void jet_mul_trunc(Jet& out, const Jet& a, const Jet& b, BigComplex& scratch) {
  const size_t L = out.size() - 1;
  for (size_t i = 0; i <= L; ++i) {
    out[i].reset(out[i].prec());
    const size_t lo = i >= b.size() ? i - (b.size() - 1) : 0;
    const size_t hi = std::min(i, a.size() - 1);
    for (size_t u = lo; u <= hi; ++u) {
      BigComplex::mul_acc(out[i], a[u], b[i - u], scratch);
    }
  }
}

/// a := a * (d + t) in place, truncated to the order of a.
inline void jet_mul_linear(Jet& a, const BigComplex& d, BigComplex& scratch) {
  for (size_t i = a.size() - 1; i > 0; --i) {
    BigComplex::mul(scratch, a[i], d);
    scratch += a[i - 1];
    std::swap(a[i], scratch);
  }
  BigComplex::mul(scratch, a[0], d);
  std::swap(a[0], scratch);
}

/// out := (d + t)^m truncated to the order of out, via the binomial theorem.
/// Binomial coefficients are built by the exact integer recurrence
/// C(m,i) = C(m,i-1) (m-i+1)/i carried in BigFloat.
inline void jet_binomial_power(Jet& out, const BigComplex& d, long m, BigComplex& scratch) {
  if (m < 1) throw ValidationError("binomial power needs a positive exponent");
  const mpfr_prec_t prec = out[0].prec();
  const long L = static_cast<long>(out.size()) - 1;
  const long top = std::min(m, L);
  jet_zero(out);

  // Lowest stored power of d is d^(m-top).
  BigComplex pw = BigComplex::one(prec);
  for (long k = 0; k < m - top; ++k) {
    BigComplex::mul(scratch, pw, d);
    std::swap(pw, scratch);
  }
  BigFloat binom(1.0, prec);
  for (long i = 1; i <= top; ++i) {
    binom *= static_cast<double>(m - i + 1);
    binom /= BigFloat(static_cast<double>(i), prec);
  }
  // Walk i = top down to 0, raising the power of d as we go.
  for (long i = top;; --i) {
    out[static_cast<size_t>(i)] = pw * binom;
    if (i == 0) break;
    BigComplex::mul(scratch, pw, d);
    std::swap(pw, scratch);
    binom *= static_cast<double>(i);
    binom /= BigFloat(static_cast<double>(m - i + 1), prec);
  }
}

}  // namespace varkit::detail
