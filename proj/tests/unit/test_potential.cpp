#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "support/support.hpp"
#include "varkit/errors.hpp"
#include "varkit/grid.hpp"
#include "varkit/smoothing.hpp"
#include "varkit/variety.hpp"

using varkit::GridSpec;
using varkit::MultiplicityVariety;
using varkit::Potential;

namespace {

MultiplicityVariety complete(std::vector<std::pair<std::complex<double>, int>> pts) {
  return MultiplicityVariety::from_doubles(pts, MultiplicityVariety::kComplete);
}

}  // namespace

TEST_CASE("rescaling moves every node outside radius 2") {
  const auto a = complete({{{3.0, 0.0}, 1}});
  const auto b = complete({{{2.0, 0.0}, 1}});
  const auto c = complete({{{1.0, 0.0}, 1}});
  const auto d = complete({{{0.25, 0.0}, 1}, {{64.0, 0.0}, 1}});
  const auto e = complete({{{0.0, 0.0}, 3}});
  CHECK(Potential(a).scale_exponent() == 0);
  CHECK(Potential(b).scale_exponent() == 1);
  CHECK(Potential(c).scale_exponent() == 2);
  CHECK(Potential(d).scale_exponent() == 4);
  // A lone origin point needs no rescaling.
  CHECK(Potential(e).scale_exponent() == 0);
}

TEST_CASE("single-node potential has the closed form ln(|z-a|^2/|a|^2)") {
  const auto V = complete({{{2.0, 0.0}, 1}});
  const Potential P(V);
  CHECK(P.eval_V({3.0, 0.0}) == doctest::Approx(std::log(0.25)));
  CHECK(P.eval_V({0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(P.eval_V({-2.0, 0.0}) == doctest::Approx(std::log(16.0 / 4.0)));
  // Exactly -inf at the node.
  const double at_node = P.eval_V({2.0, 0.0});
  CHECK(std::isinf(at_node));
  CHECK(at_node < 0.0);
}

TEST_CASE("potential values are invariant under the internal homothety") {
  // The same geometry at two overall scales: V compares z to z_j in
  // scale-free ratios, so values at corresponding points agree.
  const auto VA = complete({{{3.0, 0.0}, 1}, {{0.0, 5.0}, 2}});
  const auto VB = complete({{{0.75, 0.0}, 1}, {{0.0, 1.25}, 2}});
  const Potential A(VA);
  const Potential B(VB);
  for (const std::complex<double> z :
       {std::complex<double>(1.0, 1.0), std::complex<double>(-4.0, 2.0),
        std::complex<double>(0.5, -6.0)}) {
    CHECK(A.eval_V(z) == doctest::Approx(B.eval_V(z * 0.25)).epsilon(1e-12));
    CHECK(A.eval_correction(z) == doctest::Approx(B.eval_correction(z * 0.25)).epsilon(1e-12));
  }
}

TEST_CASE("origin multiplicity contributes the explicit log term") {
  const auto V = complete({{{0.0, 0.0}, 2}, {{3.0, 0.0}, 1}});
  const Potential P(V);
  for (const double r : {1e-3, 1e-6, 1e-9}) {
    const double rem = P.eval_V({r, 0.0}) - 2.0 * std::log(r * r);
    CHECK(std::abs(rem) < 0.01);  // ln(|z-3|^2/9) -> 0 as z -> 0
  }
  CHECK(std::isinf(P.eval_V({0.0, 0.0})));
}

TEST_CASE("radial correction integral: closed form and shape") {
  const auto V = complete({{{3.0, 0.0}, 1}});
  const Potential P(V);
  // g(t) = ln(t/3) + 3/t - 1 for t >= 3; at t = 3e this is 1/e.
  CHECK(P.correction_integral(3.0 * std::exp(1.0)) == doctest::Approx(std::exp(-1.0)));
  CHECK(P.correction_integral(3.0) == doctest::Approx(0.0));
  CHECK(P.correction_integral(1.0) == doctest::Approx(0.0));
  CHECK(P.correction_integral(0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(P.correction_integral(-1.0), varkit::ValidationError);

  // Nondecreasing, continuous across node radii.
  double prev = 0.0;
  for (double t = 0.5; t < 40.0; t += 0.25) {
    const double g = P.correction_integral(t);
    CHECK(g >= prev - 1e-12);
    prev = g;
  }

  // The public evaluation composes the homothety with t = 8|z|; its value
  // is scale-free, so a unit node yields the same 1/e at |z| = e/8.
  const auto VQ = complete({{{1.0, 0.0}, 1}});
  const Potential Q(VQ);
  CHECK(Q.scale_exponent() == 2);
  CHECK(Q.eval_correction({std::exp(1.0) / 8.0, 0.0}) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("correction integral agrees with composite-simpson quadrature") {
  const std::vector<std::pair<double, int>> nodes = {
      {2.5, 1}, {3.0, 2}, {4.75, 1}, {9.5, 3}, {17.0, 1}};
  std::vector<std::pair<std::complex<double>, int>> pts;
  for (const auto& [r, m] : nodes) pts.push_back({{r, 0.0}, m});
  const auto V = complete(pts);
  const Potential P(V);
  REQUIRE(P.scale_exponent() == 0);
  for (const double t : {1.0, 2.7, 3.5, 8.0, 12.0, 29.0}) {
    const double got = P.correction_integral(t);
    const double ref = testsupport::correction_quadrature(nodes, t);
    INFO("t = ", t);
    CHECK(got == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("combined potential U = V + alpha * correction") {
  const auto V = complete({{{3.0, 0.0}, 1}, {{0.0, 4.0}, 1}});
  const Potential P(V);
  const std::complex<double> z{1.0, 2.0};
  CHECK(P.eval_U(z, 2.0) ==
        doctest::Approx(P.eval_V(z) + 2.0 * P.eval_correction(z)).epsilon(1e-14));
  CHECK_THROWS_AS(P.eval_U(z, 0.0), varkit::ValidationError);
  CHECK_THROWS_AS(P.eval_U(z, -1.0), varkit::ValidationError);
}

TEST_CASE("truncated varieties bound the trusted radii") {
  const auto V = MultiplicityVariety::from_doubles({{{4.0, 0.0}, 1}}, 6);
  const Potential P(V);
  CHECK(P.trusted_radius_V() == doctest::Approx(16.0));
  CHECK(P.trusted_radius_U() == doctest::Approx(8.0));
  CHECK_NOTHROW(P.eval_V({15.0, 0.0}));
  CHECK_THROWS_AS(P.eval_V({17.0, 0.0}), varkit::TruncationError);
  CHECK_NOTHROW(P.eval_correction({7.5, 0.0}));
  CHECK_THROWS_AS(P.eval_correction({9.0, 0.0}), varkit::TruncationError);
  CHECK_THROWS_AS(P.eval_U({9.0, 0.0}, 1.0), varkit::TruncationError);
}

TEST_CASE("fused stencil agrees with the reference five-point laplacian") {
  const auto V = complete(
      {{{0.0, 0.0}, 2}, {{2.5, 0.0}, 1}, {{-3.0, 4.0}, 1}, {{0.0, 8.0}, 2}, {{20.0, 0.0}, 1}});
  const Potential P(V);
  const auto grid = GridSpec::cartesian(41, 41, 2.0);
  const double h = grid.spacing();

  // With a huge tolerance the search accepts alpha = 1 immediately, and
  // min_laplacian is the minimum of the fused stencil over the kept points.
  const auto res = P.fit_alpha(grid, 1e9);
  CHECK(res.alpha == doctest::Approx(1.0));
  CHECK(res.spacing == doctest::Approx(h));
  CHECK(res.grid_points_used + res.grid_points_excluded == grid.point_count());
  CHECK(res.grid_points_used > 0);
  REQUIRE(res.trace.size() == 1);

  // Reference: same exclusion rule, reference laplacians.
  double ref_min = std::numeric_limits<double>::infinity();
  std::complex<double> ref_worst{0.0, 0.0};
  long used = 0;
  const double excl = 10.0 * h;
  for (const auto& z : grid.enumerate()) {
    bool near = false;
    for (int j = 0; j < V.size() && !near; ++j) {
      near = std::norm(z - V.point(j).zd) <= excl * excl;
    }
    if (near) continue;
    ++used;
    const double lap = P.laplacian_V(z, h) + P.laplacian_correction(z, h);
    if (lap < ref_min) {
      ref_min = lap;
      ref_worst = z;
    }
  }
  CHECK(used == res.grid_points_used);
  const double scale = std::max(1.0, std::abs(ref_min));
  CHECK(std::abs(res.min_laplacian - ref_min) <= 1e-7 * scale);
  // The reported worst point attains the minimum (up to rounding ties).
  const double at_worst =
      P.laplacian_V(res.worst_point, h) + P.laplacian_correction(res.worst_point, h);
  CHECK(std::abs(at_worst - ref_min) <= 1e-6 * scale);
  (void)ref_worst;
}

TEST_CASE("alpha search terminates with a certified minimum") {
  const auto V = complete({{{0.0, 0.0}, 1}, {{3.0, 0.0}, 2}, {{0.0, -12.0}, 1},
                           {{40.0, 9.0}, 1}, {{-120.0, 0.0}, 2}});
  const Potential P(V);
  const auto grid = GridSpec::polar(48, 64, 60.0);
  const double h = grid.spacing();
  const auto res = P.fit_alpha(grid, 1e-6);
  CHECK(res.alpha >= 1.0);
  // alpha doubles from 1, so it is a power of two.
  CHECK(std::exp2(std::round(std::log2(res.alpha))) == doctest::Approx(res.alpha));
  CHECK(res.min_laplacian >= -1e-6 / (h * h) - 1e-9);
  CHECK(res.trace.size() >= 1);
  CHECK(res.trace.back().first == doctest::Approx(res.alpha));
  CHECK(res.trace.back().second == doctest::Approx(res.min_laplacian));

  // When the correction laplacian stays non-negative on the grid, raising
  // alpha never hurts: the trace minima are non-decreasing.
  if (res.min_laplacian_correction >= 0.0) {
    for (size_t i = 1; i < res.trace.size(); ++i) {
      CHECK(res.trace[i].second >= res.trace[i - 1].second - 1e-12);
    }
  }
}

TEST_CASE("alpha search parameter validation and degenerate grids") {
  const auto V = complete({{{3.0, 0.0}, 1}});
  const Potential P(V);
  const auto grid = GridSpec::cartesian(5, 5, 1.0);
  CHECK_THROWS_AS(P.fit_alpha(grid, 0.0), varkit::ValidationError);
  CHECK_THROWS_AS(P.fit_alpha(grid, 1e-6, 0.5), varkit::ValidationError);

  // Every point excluded (all within 10h of the node): alpha = 1, zero used.
  const auto VO = complete({{{0.0, 0.0}, 1}});
  const Potential Q(VO);
  const auto tiny = GridSpec::cartesian(3, 3, 0.1);
  const auto res = Q.fit_alpha(tiny, 1e-6);
  CHECK(res.grid_points_used == 0);
  CHECK(res.alpha == doctest::Approx(1.0));
  CHECK(res.min_laplacian == doctest::Approx(0.0));
}
