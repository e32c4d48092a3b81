#pragma once

#include <complex>
#include <string>
#include <vector>

namespace varkit {

enum class WeightKind { Power, LogPoly, ExpType };

struct AxiomRatio {
  double r = 0.0;
  double value = 0.0;
};

/// Diagnostics for the two quantitative weight axioms: domination of
/// ln(1+r^2) and doubling.  Suprema are taken over the sample grid, so the
/// constants reported here are empirical lower bounds for the true ones.
struct AxiomReport {
  std::vector<AxiomRatio> log_bound_ratios;  // ln(1+r^2)/p(r)
  std::vector<AxiomRatio> doubling_ratios;   // p(2r)/p(r)
  std::vector<double> zero_p_radii;          // radii skipped because p(r) == 0
  double sup_log_bound = 0.0;
  double sup_doubling = 0.0;
  double cap_log_bound = 0.0;
  double cap_doubling = 0.0;
  bool pass_log_bound = true;
  bool pass_doubling = true;
  bool pass() const { return pass_log_bound && pass_doubling; }
};

/// Radial weight p(z) = p(|z|).  Only the three built-in kinds exist:
/// |z|^alpha, ln(1+|z|^2) and |z|; arbitrary tabulated weights are rejected
/// at parse time.
class Weight {
public:
  static Weight power(double alpha);
  static Weight log_poly();
  static Weight exp_type();
  /// Accepts "power:<alpha>", "logpoly", "exptype".
  static Weight parse(const std::string& spelling);

  WeightKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::string spelling() const;

  double eval_radius(double r) const;
  double eval(std::complex<double> z) const { return eval_radius(std::abs(z)); }
  /// p(2^n).
  double eval_octave(int n) const;

  /// Empirical doubling constant sup p(2r)/p(r) on a dyadic grid.
  double doubling_constant() const;

  AxiomReport verify_axioms(double cap_log_bound = 1e3, double cap_doubling = 64.0) const;

private:
  Weight(WeightKind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  WeightKind kind_;
  double alpha_;
};

}  // namespace varkit
