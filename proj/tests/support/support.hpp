#pragma once

#include <chrono>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "varkit/bigcomplex.hpp"
#include "varkit/divdiff.hpp"
#include "varkit/smoothing.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"

namespace testsupport {

/// Deterministic random source for test instances (fixed seeds per test).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(eng_);
  }
  int uniform_int(int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(eng_);
  }
  std::complex<double> in_annulus(double r_lo, double r_hi) {
    const double r = uniform(r_lo, r_hi);
    const double t = uniform(0.0, 6.283185307179586);
    return {r * std::cos(t), r * std::sin(t)};
  }
  std::complex<double> in_box(double half) {
    return {uniform(-half, half), uniform(-half, half)};
  }

 private:
  std::mt19937_64 eng_;
};

double rel_err(const varkit::BigComplex& got, const varkit::BigComplex& want);
double abs_err(const varkit::BigComplex& got, const varkit::BigComplex& want);

/// Reference Hermite interpolation: solves the confluent Vandermonde system
/// for the monomial coefficients by Gaussian elimination with partial
/// pivoting at solve_bits, verifies the residual, then converts to the
/// Newton-basis coefficient layout by repeated synthetic division.  This
/// shares no code path with phi_table.
varkit::DividedDifferenceTable brute_force_hermite(const varkit::MultiplicityVariety& V,
                                                   const varkit::ValueSequence& W, int q,
                                                   mpfr_prec_t solve_bits);

/// Composite-Simpson quadrature of the radial correction integral
///   g(t) = int_0^t sum_{0 < r_j <= s} m_j (1/s - r_j/s^2) ds
/// over the given (radius, multiplicity) list, split at the node radii.
double correction_quadrature(const std::vector<std::pair<double, int>>& nodes, double t,
                             int panels_per_segment = 64);

/// Centered finite-difference Wirtinger derivative (d/dx + i d/dy)/2 of
/// eval_F, with exact dyadic step h.
varkit::BigComplex wirtinger_fd(const varkit::SmoothInterpolant& S, const varkit::BigComplex& z,
                                const varkit::BigFloat& h);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace testsupport
