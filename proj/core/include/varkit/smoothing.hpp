#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "varkit/bigcomplex.hpp"
#include "varkit/divdiff.hpp"
#include "varkit/grid.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"

namespace varkit {

/// Fixed smooth radial cutoff: chi(x) = h((4-|x|)/3) with
/// h(t) = phi(t)/(phi(t)+phi(1-t)), phi(t) = exp(-1/t) for t>0 else 0.
/// Plateau 1 on |x| <= 1, support |x| <= 4, smooth everywhere; value and the
/// first two derivatives come from closed-form differentiation.
namespace cutoff {

struct Chi {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

Chi chi(double x);

/// chi and chi' evaluated at the precision of x.  The interpolant uses these
/// so its cutoff factors carry the full working precision: a double-rounded
/// factor would put an absolute error of order 1e-16 into F that dominates
/// any finite-difference quotient taken with a small step.
BigFloat chi_value(const BigFloat& x);
BigFloat chi_d1(const BigFloat& x);

/// chi(|z|^2 / 4^n) given |z|^2; the n-th dyadic dilation of the cutoff.
double chi_scaled(int n, double abs2);

/// rho_0 = chi_0, rho_n = chi_n - chi_{n-1}: a partition of unity whose n-th
/// bump is supported in 2^{n-1} <= |z| <= 2^{n+1}.
double partition_rho(int n, std::complex<double> z);
BigFloat partition_rho(int n, const BigComplex& z);

/// d/d(conj z) of chi_scaled(n, |z|^2): chi'(|z|^2/4^n) * z / 4^n.
std::complex<double> dbar_chi_scaled(int n, std::complex<double> z);
BigComplex dbar_chi_scaled(int n, const BigComplex& z);

}  // namespace cutoff

/// Smooth interpolant F(z) = sum_{n>=2} rho_{n-2}(z) P_{q_n}(z), where P_q is
/// the Newton interpolant on the first q points.  At most two terms are
/// active at any z.  Holds a pointer to the variety, which must outlive it.
class SmoothInterpolant {
public:
  SmoothInterpolant(const MultiplicityVariety& V, const ValueSequence& W,
                    mpfr_prec_t precision_bits);

  /// F(z) for |z| <= 2^{n_max - 2} (unbounded for complete varieties).
  BigComplex eval_F(const BigComplex& z) const;

  /// dbar F(z) = -dbar chi_{n-2}(z) * (P_{q_{n+1}}(z) - P_{q_n}(z)) on the
  /// transition annulus of octave n; exactly zero on D(0,1) and wherever the
  /// active partition bump is locally constant.
  BigComplex eval_dbar_F(const BigComplex& z) const;

  const DividedDifferenceTable& table() const { return T_; }
  const MultiplicityVariety& variety() const { return *V_; }
  double trusted_radius() const;

private:
  void check_trusted(const BigFloat& radius) const;
  const MultiplicityVariety* V_;
  DividedDifferenceTable T_;
};

struct FitAlphaResult {
  double alpha = 1.0;
  double min_laplacian = 0.0;
  std::complex<double> worst_point{0.0, 0.0};
  std::vector<std::pair<double, double>> trace;  // (alpha, min laplacian) per step
  long grid_points_used = 0;
  long grid_points_excluded = 0;  // near nodes or outside the trusted stencil region
  double min_laplacian_correction = 0.0;  // smallest discrete laplacian of W alone
  double spacing = 0.0;
};

/// Subharmonic potential U = V + alpha W of a multiplicity variety:
///   V(z) = blended sum of m_j ln(|z-z_j|^2 / |z_j|^2) over dyadic scales
///          (plus m_1 ln|z|^2 when the origin carries a point),
///   W(z) = g(8|z|) with g the radial correction integral.
///
/// The constructor rescales the variety by the smallest power of two that
/// moves every nonzero node outside radius 2 and evaluates the rescaled
/// potential along that homothety, so callers pass original coordinates.
/// Holds a pointer to the variety, which must outlive it.
class Potential {
public:
  explicit Potential(const MultiplicityVariety& V);

  /// Log-singular blended part; -inf exactly at nodes.
  /// Trusted for |z| <= 2^{n_max - 2}.
  double eval_V(std::complex<double> z) const;

  /// Radial correction W(z) = g(8|z|).  Trusted for |z| <= 2^{n_max - 3}.
  double eval_correction(std::complex<double> z) const;

  /// U = V + alpha * correction, on the correction's trusted region.
  double eval_U(std::complex<double> z, double alpha) const;

  /// g(t) = sum over nonzero rescaled nodes with |z_j| <= t of
  /// m_j [ln(t/|z_j|) + |z_j|/t - 1]: the exact double integral of the step
  /// counting function, taken over the nonzero nodes.  A point at the origin
  /// is excluded (its integral diverges); its singularity is carried by the
  /// explicit origin term of eval_V instead.  t is in rescaled units.
  double correction_integral(double t) const;

  /// Five-point discrete Laplacians at mesh width h (reference versions).
  double laplacian_V(std::complex<double> z, double h) const;
  double laplacian_correction(std::complex<double> z, double h) const;

  /// Doubles alpha in {1, 2, 4, ...} until the discrete Laplacian of
  /// V + alpha W is >= -tol/h^2 on every usable grid point (points within
  /// 10h of a node or outside the trusted region are excluded).  Throws
  /// NoAlphaFoundError when alpha_cap is exhausted.
  FitAlphaResult fit_alpha(const GridSpec& grid, double tol = 1e-6,
                           double alpha_cap = 1048576.0) const;

  int scale_exponent() const { return s_; }
  double trusted_radius_V() const;
  double trusted_radius_U() const;

private:
  double stencil_V(std::complex<double> z, double h) const;  // sum(arms) - 4*center
  double blend_weight(int k_tilde, double abs2) const;

  const MultiplicityVariety* V_;
  int s_ = 0;
  long origin_mult_ = 0;
  // Nonzero rescaled nodes, sorted by radius (variety order), plus per-octave
  // contiguous ranges and prefix sums for the radial integral.
  std::vector<double> xs_, ys_, rs_, lnr2_;
  std::vector<int> mult_;
  std::vector<double> pref_m_, pref_mlnr_, pref_mr_, pref_mlnr2_;
  struct OctaveGroup {
    int k = 0;  // group octave: 2^{k-1} < |z_j| <= 2^k (exact dyadic test)
    size_t begin = 0;
    size_t end = 0;
  };
  std::vector<OctaveGroup> groups_;
};

}  // namespace varkit
