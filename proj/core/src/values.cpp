#include "varkit/values.hpp"

#include "varkit/errors.hpp"

namespace varkit {

ValueSequence::ValueSequence(const MultiplicityVariety& V, mpfr_prec_t prec) : prec_(prec) {
  if (prec < kMinPrecision) throw ValidationError("precision below the supported minimum");
  w_.resize(static_cast<size_t>(V.size()));
  for (int j = 0; j < V.size(); ++j) {
    auto& row = w_[static_cast<size_t>(j)];
    row.reserve(static_cast<size_t>(V.point(j).mult));
    for (int l = 0; l < V.point(j).mult; ++l) row.emplace_back(prec);
  }
}

ValueSequence ValueSequence::delta_first_top(const MultiplicityVariety& V, mpfr_prec_t prec) {
  if (V.size() == 0) throw ValidationError("need at least one point");
  ValueSequence W(V, prec);
  W.set(0, V.point(0).mult - 1, BigComplex::one(prec));
  return W;
}

const BigComplex& ValueSequence::at(int j, int l) const {
  if (j < 0 || j >= points() || l < 0 || l >= width(j)) {
    throw ValidationError("value slot out of range");
  }
  return w_[static_cast<size_t>(j)][static_cast<size_t>(l)];
}

void ValueSequence::set(int j, int l, const BigComplex& value) {
  if (j < 0 || j >= points() || l < 0 || l >= width(j)) {
    throw ValidationError("value slot out of range");
  }
  w_[static_cast<size_t>(j)][static_cast<size_t>(l)] = value.rounded(prec_);
}

BigFloat ValueSequence::slot_abs_sum(int j) const {
  if (j < 0 || j >= points()) throw ValidationError("point index out of range");
  BigFloat acc(prec_);
  for (const auto& w : w_[static_cast<size_t>(j)]) acc += w.abs();
  return acc;
}

}  // namespace varkit
