#include <doctest.h>

#include "varkit/bigcomplex.hpp"
#include "varkit/errors.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"

using varkit::BigComplex;
using varkit::MultiplicityVariety;
using varkit::ValueSequence;

namespace {

MultiplicityVariety two_points() {
  return MultiplicityVariety::from_doubles({{{0.0, 0.0}, 2}, {{1.0, 0.0}, 1}},
                                           MultiplicityVariety::kComplete);
}

}  // namespace

TEST_CASE("zero sequence matches the variety shape") {
  const auto V = two_points();
  const ValueSequence W(V, varkit::kDefaultPrecision);
  REQUIRE(W.points() == 2);
  CHECK(W.width(0) == 2);
  CHECK(W.width(1) == 1);
  CHECK(W.at(0, 0).is_zero());
  CHECK(W.at(0, 1).is_zero());
  CHECK(W.at(1, 0).is_zero());
  CHECK(W.prec() == varkit::kDefaultPrecision);
}

TEST_CASE("delta sequence is 1 in the top slot of the first point") {
  const auto V = two_points();
  const auto W = ValueSequence::delta_first_top(V, varkit::kDefaultPrecision);
  CHECK(W.at(0, 1) == BigComplex::one(varkit::kDefaultPrecision));
  CHECK(W.at(0, 0).is_zero());
  CHECK(W.at(1, 0).is_zero());
}

TEST_CASE("set and at enforce slot bounds") {
  const auto V = two_points();
  ValueSequence W(V, varkit::kDefaultPrecision);
  const BigComplex w(3.0, 4.0, varkit::kDefaultPrecision);
  W.set(0, 1, w);
  CHECK(W.at(0, 1) == w);
  CHECK_THROWS_AS(W.at(0, 2), varkit::ValidationError);
  CHECK_THROWS_AS(W.at(2, 0), varkit::ValidationError);
  CHECK_THROWS_AS(W.at(-1, 0), varkit::ValidationError);
  CHECK_THROWS_AS(W.set(1, 1, w), varkit::ValidationError);
}

TEST_CASE("slot_abs_sum adds the moduli of one point's values") {
  const auto V = two_points();
  ValueSequence W(V, varkit::kDefaultPrecision);
  W.set(0, 0, BigComplex(3.0, 4.0, varkit::kDefaultPrecision));   // |w| = 5
  W.set(0, 1, BigComplex(0.0, -1.0, varkit::kDefaultPrecision));  // |w| = 1
  CHECK(W.slot_abs_sum(0).to_double() == doctest::Approx(6.0));
  CHECK(W.slot_abs_sum(1).is_zero());
}

TEST_CASE("precision below the floor is rejected") {
  const auto V = two_points();
  CHECK_THROWS_AS(ValueSequence(V, 16), varkit::ValidationError);
}
