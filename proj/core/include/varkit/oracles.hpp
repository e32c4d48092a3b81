#pragma once

#include <vector>

#include "varkit/divdiff.hpp"

namespace varkit {

/// f(z) = sin z, with taylor(x, k, prec) = sin^{(k)}(x)/k!.
FunctionOracle oracle_sin();

/// Polynomial with the given monomial coefficients (constant term first).
/// Taylor coefficients are produced by synthetic division, exact up to
/// rounding at the working precision.
FunctionOracle oracle_polynomial(std::vector<BigComplex> coeffs);

}  // namespace varkit
