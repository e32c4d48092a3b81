#pragma once

#include <vector>

#include "varkit/bigcomplex.hpp"
#include "varkit/variety.hpp"

namespace varkit {

/// Prescribed Taylor data on a multiplicity variety: one value w_{j,l} per
/// point j and derivative slot 0 <= l < m_j, stored as f^{(l)}(z_j)/l!.
class ValueSequence {
public:
  /// All-zero sequence matching the shape of V.
  ValueSequence(const MultiplicityVariety& V, mpfr_prec_t prec);

  /// Sequence that is 1 in the top derivative slot of the first point and 0
  /// everywhere else.
  static ValueSequence delta_first_top(const MultiplicityVariety& V, mpfr_prec_t prec);

  int points() const { return static_cast<int>(w_.size()); }
  int width(int j) const { return static_cast<int>(w_[static_cast<size_t>(j)].size()); }

  const BigComplex& at(int j, int l) const;
  void set(int j, int l, const BigComplex& value);

  /// sum_l |w_{j,l}|, at the sequence precision.
  BigFloat slot_abs_sum(int j) const;

  mpfr_prec_t prec() const { return prec_; }

private:
  std::vector<std::vector<BigComplex>> w_;
  mpfr_prec_t prec_;
};

}  // namespace varkit
