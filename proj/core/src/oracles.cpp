#include "varkit/oracles.hpp"

#include "varkit/errors.hpp"

namespace varkit {

FunctionOracle oracle_sin() {
  FunctionOracle f;
  f.taylor = [](const BigComplex& x, int k, mpfr_prec_t prec) {
    if (k < 0) throw ValidationError("derivative order must be non-negative");
    BigComplex v(prec);
    switch (k % 4) {
      case 0:
        v = BigComplex::sin(x.rounded(prec));
        break;
      case 1:
        v = BigComplex::cos(x.rounded(prec));
        break;
      case 2:
        v = BigComplex::sin(x.rounded(prec));
        v.negate();
        break;
      default:
        v = BigComplex::cos(x.rounded(prec));
        v.negate();
        break;
    }
    if (k > 1) {
      BigFloat fact = BigFloat::factorial(static_cast<unsigned long>(k), prec);
      mpfr_div(v.re().raw(), v.re().raw(), fact.raw(), MPFR_RNDN);
      mpfr_div(v.im().raw(), v.im().raw(), fact.raw(), MPFR_RNDN);
    }
    return v;
  };
  return f;
}

FunctionOracle oracle_polynomial(std::vector<BigComplex> coeffs) {
  if (coeffs.empty()) throw ValidationError("polynomial needs at least one coefficient");
  FunctionOracle f;
  f.taylor = [coeffs = std::move(coeffs)](const BigComplex& x, int k, mpfr_prec_t prec) {
    if (k < 0) throw ValidationError("derivative order must be non-negative");
    const int n = static_cast<int>(coeffs.size());
    if (k >= n) return BigComplex::zero(prec);
    // k+1 rounds of synthetic division by (z - x); the last remainder is the
    // coefficient of (z - x)^k, i.e. f^{(k)}(x)/k!.
    std::vector<BigComplex> b;
    b.reserve(coeffs.size());
    for (const auto& c : coeffs) b.push_back(c.rounded(prec));
    const BigComplex xr = x.rounded(prec);
    BigComplex scratch(prec);
    BigComplex out(prec);
    for (int round = 0; round <= k; ++round) {
      for (int i = n - 2; i >= round; --i) {
        BigComplex::mul(scratch, b[static_cast<size_t>(i + 1)], xr);
        b[static_cast<size_t>(i)] += scratch;
      }
      if (round == k) out = b[static_cast<size_t>(round)];
    }
    return out;
  };
  return f;
}

}  // namespace varkit
