#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "varkit/bigcomplex.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"

namespace varkit {

/// Newton coefficients of the interpolation problem on a variety prefix:
/// phi(j, l) multiplies prod_{k<j} (z - z_k)^{m_k} * (z - z_j)^l.
struct DividedDifferenceTable {
  std::vector<std::vector<BigComplex>> phi;
  mpfr_prec_t precision_bits = 0;
  int points() const { return static_cast<int>(phi.size()); }
  const BigComplex& at(int j, int l) const {
    return phi[static_cast<size_t>(j)][static_cast<size_t>(l)];
  }
};

/// Builds the coefficient table for the first q points of V against the
/// prescribed values W, working at precision_bits.
DividedDifferenceTable phi_table(const MultiplicityVariety& V, const ValueSequence& W, int q,
                                 mpfr_prec_t precision_bits);

/// Taylor coefficient of order l at z of the interpolation polynomial built
/// from the first q rows of T, i.e. P_q^{(l)}(z) / l!.
BigComplex newton_eval(const MultiplicityVariety& V, const DividedDifferenceTable& T, int q,
                       const BigComplex& z, int l = 0);

/// Entire (or at least sufficiently differentiable) function presented by its
/// Taylor coefficients: taylor(x, k, prec) must return f^{(k)}(x) / k!.
struct FunctionOracle {
  std::function<BigComplex(const BigComplex& x, int k, mpfr_prec_t prec)> taylor;
  int max_order = std::numeric_limits<int>::max();
};

/// Divided difference of f over the node multiset given by `groups`
/// (node, repetition count), i.e. the leading coefficient of the interpolant
/// matching f to order r_i - 1 at each x_i.
BigComplex hermite_divdiff(const FunctionOracle& f,
                           const std::vector<std::pair<BigComplex, int>>& groups,
                           mpfr_prec_t precision_bits);

/// Values of f on the variety: w_{j,l} = f^{(l)}(z_j) / l!.
ValueSequence restriction_values(const FunctionOracle& f, const MultiplicityVariety& V,
                                 mpfr_prec_t precision_bits);

/// Coefficient table of the interpolant to f on the first q points of V,
/// computed by confluent divided differences (an independent route from
/// phi_table applied to restriction_values).
DividedDifferenceTable restriction_table(const FunctionOracle& f, const MultiplicityVariety& V,
                                         int q, mpfr_prec_t precision_bits);

}  // namespace varkit
