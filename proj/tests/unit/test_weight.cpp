#include <doctest.h>

#include <cmath>

#include "varkit/errors.hpp"
#include "varkit/weight.hpp"

using varkit::Weight;
using varkit::WeightKind;

TEST_CASE("weight parsing accepts the three built-in kinds") {
  CHECK(Weight::parse("power:1").kind() == WeightKind::Power);
  CHECK(Weight::parse("power:0.5").alpha() == doctest::Approx(0.5));
  CHECK(Weight::parse("logpoly").kind() == WeightKind::LogPoly);
  CHECK(Weight::parse("exptype").kind() == WeightKind::ExpType);

  CHECK_THROWS_AS(Weight::parse("gaussian"), varkit::ParseError);
  CHECK_THROWS_AS(Weight::parse("power:"), varkit::ParseError);
  CHECK_THROWS_AS(Weight::parse("power:abc"), varkit::ParseError);
  CHECK_THROWS_AS(Weight::parse("power:-1"), varkit::ValidationError);
  CHECK_THROWS_AS(Weight::power(0.0), varkit::ValidationError);
  CHECK_THROWS_AS(Weight::parse(""), varkit::ParseError);
}

TEST_CASE("weight spellings round-trip through parse") {
  for (const auto* s : {"power:1", "power:0.5", "power:2", "logpoly", "exptype"}) {
    CHECK(Weight::parse(Weight::parse(s).spelling()).spelling() == Weight::parse(s).spelling());
  }
}

TEST_CASE("weight evaluation matches the defining formulas") {
  CHECK(Weight::power(2.0).eval_radius(3.0) == doctest::Approx(9.0));
  CHECK(Weight::power(0.5).eval_radius(16.0) == doctest::Approx(4.0));
  CHECK(Weight::log_poly().eval_radius(2.0) == doctest::Approx(std::log(5.0)));
  CHECK(Weight::exp_type().eval_radius(7.0) == doctest::Approx(7.0));

  // p acts through |z| only.
  CHECK(Weight::power(1.0).eval({3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(Weight::log_poly().eval({0.0, 2.0}) == doctest::Approx(std::log(5.0)));

  // Octave shorthand.
  CHECK(Weight::power(1.0).eval_octave(4) == doctest::Approx(16.0));
  CHECK(Weight::exp_type().eval_octave(0) == doctest::Approx(1.0));
}

TEST_CASE("all built-in weights satisfy both axioms") {
  for (const auto* s : {"power:0.5", "power:1", "power:2", "logpoly", "exptype"}) {
    const auto report = Weight::parse(s).verify_axioms();
    INFO("weight ", s, " sup_log_bound=", report.sup_log_bound,
         " sup_doubling=", report.sup_doubling);
    CHECK(report.pass_log_bound);
    CHECK(report.pass_doubling);
    CHECK(report.pass());
    CHECK(report.sup_log_bound > 0.0);
    CHECK(report.sup_doubling >= 1.0);
  }
}

TEST_CASE("doubling constants match the closed forms") {
  // p(r) = r^a doubles by exactly 2^a; p(r) = r by exactly 2.
  CHECK(Weight::power(1.0).doubling_constant() == doctest::Approx(2.0));
  CHECK(Weight::power(2.0).doubling_constant() == doctest::Approx(4.0));
  CHECK(Weight::exp_type().doubling_constant() == doctest::Approx(2.0));
  // ln(1+4r^2)/ln(1+r^2) -> 4/ln2 * ... is maximal near r ~ 1; it stays
  // well under the generic doubling cap.
  CHECK(Weight::log_poly().doubling_constant() < 4.0);
  CHECK(Weight::log_poly().doubling_constant() >= 1.0);
}

TEST_CASE("a tight cap fails the doubling axiom honestly") {
  const auto report = Weight::power(2.0).verify_axioms(1e3, 3.0);
  CHECK_FALSE(report.pass_doubling);
  CHECK_FALSE(report.pass());
  CHECK(report.cap_doubling == doctest::Approx(3.0));
}
