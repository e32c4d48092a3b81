#include "varkit/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "varkit/errors.hpp"

namespace varkit {

namespace cutoff {

namespace {

double mollifier(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double mollifier_d1(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }
double mollifier_d2(double t) {
  return t > 0.0 ? std::exp(-1.0 / t) * (1.0 - 2.0 * t) / (t * t * t * t) : 0.0;
}

}  // namespace

Chi chi(double x) {
  const double ax = std::fabs(x);
  if (ax <= 1.0) return {1.0, 0.0, 0.0};
  if (ax >= 4.0) return {0.0, 0.0, 0.0};
  const double t = (4.0 - ax) / 3.0;  // in (0, 1)
  const double u = mollifier(t);
  const double v = mollifier(1.0 - t);
  const double u1 = mollifier_d1(t);
  const double v1 = -mollifier_d1(1.0 - t);  // d/dt of mollifier(1-t)
  const double u2 = mollifier_d2(t);
  const double v2 = mollifier_d2(1.0 - t);
  const double D = u + v;
  const double N1 = u1 * v - u * v1;
  const double ht = N1 / (D * D);
  const double htt = ((u2 * v - u * v2) * D - 2.0 * N1 * (u1 + v1)) / (D * D * D);
  // chain rule through t(x) = (4 - |x|)/3
  const double sign = x < 0.0 ? -1.0 : 1.0;
  Chi out;
  out.value = u / D;
  out.d1 = ht * (-sign / 3.0);
  out.d2 = htt / 9.0;
  return out;
}

BigFloat chi_value(const BigFloat& x) {
  const mpfr_prec_t prec = x.prec();
  const BigFloat ax = abs(x);
  if (ax <= 1.0) return BigFloat(1.0, prec);
  if (ax >= 4.0) return BigFloat(0.0, prec);
  const BigFloat one(1.0, prec);
  const BigFloat t = (BigFloat(4.0, prec) - ax) / BigFloat(3.0, prec);
  // Near the support edges one exponential underflows to zero, which is the
  // correct flush at any finite precision.
  const BigFloat u = exp(-(one / t));
  const BigFloat v = exp(-(one / (one - t)));
  return u / (u + v);
}

BigFloat chi_d1(const BigFloat& x) {
  const mpfr_prec_t prec = x.prec();
  const BigFloat ax = abs(x);
  if (ax <= 1.0 || ax >= 4.0) return BigFloat(0.0, prec);
  const BigFloat one(1.0, prec);
  const BigFloat t = (BigFloat(4.0, prec) - ax) / BigFloat(3.0, prec);
  const BigFloat s = one - t;
  const BigFloat u = exp(-(one / t));
  const BigFloat v = exp(-(one / s));
  const BigFloat u1 = u / (t * t);
  const BigFloat v1 = -(v / (s * s));  // d/dt of mollifier(1-t)
  const BigFloat D = u + v;
  const BigFloat ht = (u1 * v - u * v1) / (D * D);
  // chain rule through t(x) = (4 - |x|)/3
  return ht / BigFloat(x < 0.0 ? 3.0 : -3.0, prec);
}

double chi_scaled(int n, double abs2) {
  if (n < 0) throw ValidationError("cutoff scale index must be non-negative");
  return chi(std::ldexp(abs2, -2 * n)).value;
}

double partition_rho(int n, std::complex<double> z) {
  if (n < 0) throw ValidationError("partition index must be non-negative");
  const double u = std::norm(z);
  if (n == 0) return chi_scaled(0, u);
  return chi_scaled(n, u) - chi_scaled(n - 1, u);
}

BigFloat partition_rho(int n, const BigComplex& z) {
  if (n < 0) throw ValidationError("partition index must be non-negative");
  BigFloat un = z.norm();
  un.scale_2exp(-2 * n);
  if (n == 0) return chi_value(un);
  BigFloat um = un;
  um.scale_2exp(2);
  return chi_value(un) - chi_value(um);
}

std::complex<double> dbar_chi_scaled(int n, std::complex<double> z) {
  if (n < 0) throw ValidationError("cutoff scale index must be non-negative");
  const double s = std::ldexp(1.0, -2 * n);
  const double c = chi(std::norm(z) * s).d1 * s;
  return {c * z.real(), c * z.imag()};
}

BigComplex dbar_chi_scaled(int n, const BigComplex& z) {
  if (n < 0) throw ValidationError("cutoff scale index must be non-negative");
  BigFloat x = z.norm();
  x.scale_2exp(-2 * n);
  BigFloat c = chi_d1(x);
  c.scale_2exp(-2 * n);
  BigComplex out(z.prec());
  out.re() = z.re() * c;
  out.im() = z.im() * c;
  return out;
}

}  // namespace cutoff

SmoothInterpolant::SmoothInterpolant(const MultiplicityVariety& V, const ValueSequence& W,
                                     mpfr_prec_t precision_bits)
    : V_(&V) {
  if (V.size() > 0) {
    T_ = phi_table(V, W, V.size(), precision_bits);
  } else {
    T_.precision_bits = precision_bits;
  }
}

double SmoothInterpolant::trusted_radius() const {
  if (V_->complete()) return std::numeric_limits<double>::infinity();
  return std::ldexp(1.0, V_->n_max() - 2);
}

void SmoothInterpolant::check_trusted(const BigFloat& radius) const {
  if (V_->complete()) return;
  if (radius > BigFloat::pow2(V_->n_max() - 2, radius.prec())) {
    throw TruncationError("evaluation point outside the trusted disc of radius 2^(n_max-2)");
  }
}

BigComplex SmoothInterpolant::eval_F(const BigComplex& z) const {
  check_trusted(z.abs());
  const mpfr_prec_t prec = T_.precision_bits;
  BigComplex acc(prec);
  if (V_->size() == 0) return acc;
  const BigComplex zq = z.rounded(prec);
  const double u = std::norm(z.to_complex_double());
  for (int n = 2;; ++n) {
    const BigFloat r = cutoff::partition_rho(n - 2, zq);
    if (!r.is_zero()) {
      const int q = V_->octave_count(n);
      if (q > 0) acc += newton_eval(*V_, T_, q, z, 0) * r;
    }
    // Later bumps vanish once 4^{n-2} >= |z|^2.
    if (std::ldexp(1.0, 2 * (n - 2)) >= u) break;
  }
  return acc;
}

BigComplex SmoothInterpolant::eval_dbar_F(const BigComplex& z) const {
  check_trusted(z.abs());
  const mpfr_prec_t prec = T_.precision_bits;
  if (V_->size() == 0) return BigComplex::zero(prec);
  const std::complex<double> zd = z.to_complex_double();
  const double u = std::norm(zd);
  if (u <= 1.0) return BigComplex::zero(prec);

  // Exactly one dilated cutoff can have nonzero slope at z: the k with
  // 4^k < |z|^2 < 4^{k+1}.
  int k = 0;
  while (std::ldexp(1.0, 2 * k + 2) < u) ++k;
  if (u <= std::ldexp(1.0, 2 * k) || u >= std::ldexp(1.0, 2 * k + 2)) {
    return BigComplex::zero(prec);
  }
  const int n = k + 2;
  const int qa = V_->octave_count(n);
  const int qb = V_->octave_count(n + 1);
  if (qa == qb) return BigComplex::zero(prec);
  const BigComplex c = cutoff::dbar_chi_scaled(k, z.rounded(prec));
  if (c.is_zero()) return BigComplex::zero(prec);
  BigComplex delta = newton_eval(*V_, T_, qb, z, 0);
  delta -= newton_eval(*V_, T_, qa, z, 0);
  BigComplex out(prec);
  BigComplex::mul(out, delta, c);
  out.negate();
  return out;
}

Potential::Potential(const MultiplicityVariety& V) : V_(&V) {
  const int size = V.size();
  int first_nonzero = 0;
  if (size > 0 && V.point(0).z.is_zero()) {
    origin_mult_ = V.point(0).mult;
    first_nonzero = 1;
  }

  // Smallest dyadic rescale putting every nonzero node strictly outside
  // radius 2 (the blend and correction formulas assume it).
  if (first_nonzero < size) {
    BigFloat r = V.point(first_nonzero).radius;
    while (!(r > 2.0)) {
      r.scale_2exp(1);
      ++s_;
    }
  }

  const size_t count = static_cast<size_t>(size - first_nonzero);
  xs_.reserve(count);
  ys_.reserve(count);
  rs_.reserve(count);
  lnr2_.reserve(count);
  mult_.reserve(count);
  pref_m_.assign(1, 0.0);
  pref_mlnr_.assign(1, 0.0);
  pref_mr_.assign(1, 0.0);
  pref_mlnr2_.assign(1, 0.0);

  for (int j = first_nonzero; j < size; ++j) {
    const auto& p = V.point(j);
    xs_.push_back(std::ldexp(p.zd.real(), s_));
    ys_.push_back(std::ldexp(p.zd.imag(), s_));
    const double r = std::ldexp(p.radius_d, s_);
    rs_.push_back(r);
    lnr2_.push_back(2.0 * std::log(r));
    mult_.push_back(p.mult);
    const double m = static_cast<double>(p.mult);
    pref_m_.push_back(pref_m_.back() + m);
    pref_mlnr_.push_back(pref_mlnr_.back() + m * std::log(r));
    pref_mr_.push_back(pref_mr_.back() + m * r);
    pref_mlnr2_.push_back(pref_mlnr2_.back() + m * 2.0 * std::log(r));

    // Octave of the rescaled node: smallest k with |z_j| <= 2^k, decided
    // exactly on the stored radius.
    BigFloat rb = p.radius;
    rb.scale_2exp(s_);
    const long e = rb.exponent();
    const int k = static_cast<int>(rb == BigFloat::pow2(e - 1, rb.prec()) ? e - 1 : e);
    const size_t idx = xs_.size() - 1;
    if (!groups_.empty() && groups_.back().k == k) {
      groups_.back().end = idx + 1;
    } else {
      groups_.push_back({k, idx, idx + 1});
    }
  }
}

double Potential::trusted_radius_V() const {
  if (V_->complete()) return std::numeric_limits<double>::infinity();
  return std::ldexp(1.0, V_->n_max() - 2);
}

double Potential::trusted_radius_U() const {
  if (V_->complete()) return std::numeric_limits<double>::infinity();
  return std::ldexp(1.0, V_->n_max() - 3);
}

double Potential::blend_weight(int k_tilde, double abs2) const {
  if (k_tilde <= 2) return 1.0;
  const double a = std::ldexp(abs2, -2 * (k_tilde - 3));
  if (a <= 1.0) return 0.0;
  if (a >= 4.0) return 1.0;
  return 1.0 - cutoff::chi(a).value;
}

double Potential::eval_V(std::complex<double> z) const {
  if (std::abs(z) > trusted_radius_V()) {
    throw TruncationError("potential queried outside the trusted disc of radius 2^(n_max-2)");
  }
  const double zx = std::ldexp(z.real(), s_);
  const double zy = std::ldexp(z.imag(), s_);
  const double u = zx * zx + zy * zy;
  double acc = 0.0;
  if (origin_mult_ > 0) acc += static_cast<double>(origin_mult_) * std::log(u);
  for (const auto& g : groups_) {
    const double w = blend_weight(std::max(g.k, 2), u);
    if (w == 0.0) break;  // groups are ascending in octave: the rest vanish too
    double sum = 0.0;
    for (size_t i = g.begin; i < g.end; ++i) {
      const double dx = zx - xs_[i];
      const double dy = zy - ys_[i];
      sum += mult_[i] * (std::log(dx * dx + dy * dy) - lnr2_[i]);
    }
    acc += w * sum;
  }
  return acc;
}

double Potential::correction_integral(double t) const {
  if (!(t >= 0.0)) throw ValidationError("correction integral needs a non-negative radius");
  const size_t idx = static_cast<size_t>(
      std::upper_bound(rs_.begin(), rs_.end(), t) - rs_.begin());
  if (idx == 0) return 0.0;
  const double Pm = pref_m_[idx];
  const double Pmlnr = pref_mlnr_[idx];
  const double Pmr = pref_mr_[idx];
  return std::log(t) * Pm - Pmlnr + Pmr / t - Pm;
}

double Potential::eval_correction(std::complex<double> z) const {
  if (std::abs(z) > trusted_radius_U()) {
    throw TruncationError("correction queried outside the trusted disc of radius 2^(n_max-3)");
  }
  const double zx = std::ldexp(z.real(), s_);
  const double zy = std::ldexp(z.imag(), s_);
  return correction_integral(8.0 * std::hypot(zx, zy));
}

double Potential::eval_U(std::complex<double> z, double alpha) const {
  if (!(alpha > 0.0)) throw ValidationError("potential mix factor must be positive");
  return eval_V(z) + alpha * eval_correction(z);
}

double Potential::laplacian_V(std::complex<double> z, double h) const {
  if (!(h > 0.0)) throw ValidationError("stencil width must be positive");
  const std::complex<double> dx(h, 0.0), dy(0.0, h);
  return (eval_V(z + dx) + eval_V(z - dx) + eval_V(z + dy) + eval_V(z - dy) -
          4.0 * eval_V(z)) /
         (h * h);
}

double Potential::laplacian_correction(std::complex<double> z, double h) const {
  if (!(h > 0.0)) throw ValidationError("stencil width must be positive");
  const std::complex<double> dx(h, 0.0), dy(0.0, h);
  return (eval_correction(z + dx) + eval_correction(z - dx) + eval_correction(z + dy) +
          eval_correction(z - dy) - 4.0 * eval_correction(z)) /
         (h * h);
}

namespace {

// 1 + (h^8 - 2 h^4 Re(w^4)) / |w^4|^2  ==  |1 - h^4/w^4|^2: the exact
// five-point stencil factor of m ln|.|^2 terms, since the four arms of the
// stencil multiply to (w^4 - h^4).
double stencil_factor(double wx, double wy, double h4, double h8) {
  const double ax = wx * wx - wy * wy;  // w^2
  const double ay = 2.0 * wx * wy;
  const double bx = ax * ax - ay * ay;  // w^4
  const double by = 2.0 * ax * ay;
  const double den = bx * bx + by * by;
  return 1.0 + (h8 - 2.0 * h4 * bx) / den;
}

}  // namespace

double Potential::stencil_V(std::complex<double> z, double h) const {
  const double zx = std::ldexp(z.real(), s_);
  const double zy = std::ldexp(z.imag(), s_);
  const double hs = std::ldexp(h, s_);
  const double h4 = (hs * hs) * (hs * hs);
  const double h8 = h4 * h4;
  const double rc = std::hypot(zx, zy);
  const double rmin = std::max(rc - hs, 0.0);
  const double rmax = rc + hs;

  // Arm coordinates and |.|^2 at the five stencil points (center last).
  const double px[5] = {zx + hs, zx - hs, zx, zx, zx};
  const double py[5] = {zy, zy, zy + hs, zy - hs, zy};
  double pu[5];
  for (int a = 0; a < 5; ++a) pu[a] = px[a] * px[a] + py[a] * py[a];

  double acc = 0.0;
  double prod = 1.0;
  if (origin_mult_ > 0) {
    const double f = stencil_factor(zx, zy, h4, h8);
    prod *= origin_mult_ == 1 ? f : std::pow(f, static_cast<double>(origin_mult_));
  }

  for (const auto& g : groups_) {
    const int kt = std::max(g.k, 2);
    bool full = kt <= 2 || rmin >= std::ldexp(1.0, kt - 2);
    if (!full) {
      if (rmax <= std::ldexp(1.0, kt - 3)) break;  // this and all later groups vanish
      double w[5];
      bool all_one = true, all_zero = true;
      for (int a = 0; a < 5; ++a) {
        w[a] = blend_weight(kt, pu[a]);
        all_one = all_one && w[a] == 1.0;
        all_zero = all_zero && w[a] == 0.0;
      }
      if (all_zero) break;
      if (all_one) {
        full = true;
      } else {
        // Transition shell: the blend weight varies across the stencil, so
        // the log sums are needed per arm.
        double S[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
        for (size_t i = g.begin; i < g.end; ++i) {
          const double m = static_cast<double>(mult_[i]);
          for (int a = 0; a < 5; ++a) {
            const double dx = px[a] - xs_[i];
            const double dy = py[a] - ys_[i];
            S[a] += m * std::log(dx * dx + dy * dy);
          }
        }
        const double C = pref_mlnr2_[g.end] - pref_mlnr2_[g.begin];
        for (int a = 0; a < 4; ++a) acc += w[a] * (S[a] - C);
        acc -= 4.0 * w[4] * (S[4] - C);
        continue;
      }
    }
    // Full weight: the node constants cancel across the stencil and each
    // node contributes m ln|1 - h^4/(z-z_j)^4|^2, accumulated as a product
    // (factors sit within 2e-4 of 1 under the 10h exclusion, so the product
    // stays well scaled).
    for (size_t i = g.begin; i < g.end; ++i) {
      const double f = stencil_factor(zx - xs_[i], zy - ys_[i], h4, h8);
      prod *= mult_[i] == 1 ? f : std::pow(f, static_cast<double>(mult_[i]));
    }
  }
  return acc + std::log(prod);
}

FitAlphaResult Potential::fit_alpha(const GridSpec& grid, double tol, double alpha_cap) const {
  if (!(tol > 0.0)) throw ValidationError("laplacian tolerance must be positive");
  if (!(alpha_cap >= 1.0)) throw ValidationError("alpha cap must be at least 1");
  const double h = grid.spacing();
  const double trust = trusted_radius_U();
  const double excl = 10.0 * h;
  const double excl2 = excl * excl;

  std::vector<double> node_r;
  node_r.reserve(static_cast<size_t>(V_->size()));
  for (int j = 0; j < V_->size(); ++j) node_r.push_back(V_->point(j).radius_d);

  FitAlphaResult res;
  res.spacing = h;
  std::vector<double> LV, LW;
  std::vector<std::complex<double>> kept;
  const std::complex<double> dx(h, 0.0), dy(0.0, h);

  for (const auto& z : grid.enumerate()) {
    const double r = std::abs(z);
    if (r + h > trust) {
      ++res.grid_points_excluded;
      continue;
    }
    bool near = false;
    const auto lo = std::lower_bound(node_r.begin(), node_r.end(), r - excl);
    const auto hi = std::upper_bound(node_r.begin(), node_r.end(), r + excl);
    for (auto it = lo; it != hi && !near; ++it) {
      const auto& p = V_->point(static_cast<int>(it - node_r.begin()));
      near = std::norm(z - p.zd) <= excl2;
    }
    if (near) {
      ++res.grid_points_excluded;
      continue;
    }
    LV.push_back(stencil_V(z, h) / (h * h));
    LW.push_back((eval_correction(z + dx) + eval_correction(z - dx) + eval_correction(z + dy) +
                  eval_correction(z - dy) - 4.0 * eval_correction(z)) /
                 (h * h));
    kept.push_back(z);
  }
  res.grid_points_used = static_cast<long>(kept.size());
  res.min_laplacian_correction = 0.0;
  for (const double v : LW) {
    res.min_laplacian_correction = std::min(res.min_laplacian_correction, v);
  }

  const double threshold = -tol / (h * h);
  double alpha = 1.0;
  for (;;) {
    double worst = std::numeric_limits<double>::infinity();
    size_t worst_idx = 0;
    for (size_t i = 0; i < LV.size(); ++i) {
      const double v = LV[i] + alpha * LW[i];
      if (v < worst) {
        worst = v;
        worst_idx = i;
      }
    }
    if (kept.empty()) worst = 0.0;
    res.trace.emplace_back(alpha, worst);
    if (worst >= threshold) {
      res.alpha = alpha;
      res.min_laplacian = worst;
      if (!kept.empty()) res.worst_point = kept[worst_idx];
      return res;
    }
    if (alpha >= alpha_cap) {
      const auto& wp = kept[worst_idx];
      throw NoAlphaFoundError("no mix factor up to the cap makes the potential subharmonic "
                              "on the grid",
                              wp.real(), wp.imag(), worst);
    }
    alpha *= 2.0;
  }
}

}  // namespace varkit
