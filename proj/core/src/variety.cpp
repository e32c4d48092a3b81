#include "varkit/variety.hpp"

#include <algorithm>
#include <cmath>

#include "varkit/errors.hpp"

namespace varkit {

namespace {

// Exact octave of a radius: smallest n with r <= 2^n, never below 0.
// Exact because BigFloat comparison against a power of two is exact.
bool radius_in_octave(const BigFloat& radius, int n) {
  return radius <= BigFloat::pow2(n, radius.prec());
}

}  // namespace

MultiplicityVariety::MultiplicityVariety(std::vector<std::pair<BigComplex, int>> points,
                                         int n_max)
    : n_max_(n_max) {
  if (n_max != kComplete && n_max < 0) {
    throw ValidationError("n_max must be non-negative");
  }
  points_.reserve(points.size());
  for (auto& [z, m] : points) {
    if (!z.is_finite()) throw ValidationError("variety node is not finite");
    if (m < 1) throw ValidationError("multiplicity must be a positive integer");
    VarietyPoint p;
    p.radius = z.abs();
    p.zd = z.to_complex_double();
    p.radius_d = p.radius.to_double();
    p.z = std::move(z);
    p.mult = m;
    points_.push_back(std::move(p));
  }

  // Canonical order: |z| ascending, ties by principal argument ascending,
  // remaining ties keep input order (stable sort).
  std::vector<BigFloat> args;
  args.reserve(points_.size());
  for (const auto& p : points_) args.push_back(p.z.arg());
  std::vector<int> order(points_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto sa = static_cast<size_t>(a);
    const auto sb = static_cast<size_t>(b);
    const int rc = BigFloat::compare(points_[sa].radius, points_[sb].radius);
    if (rc != 0) return rc < 0;
    return BigFloat::compare(args[sa], args[sb]) < 0;
  });
  input_was_sorted_ = true;
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i] != static_cast<int>(i)) {
      input_was_sorted_ = false;
      break;
    }
  }
  if (!input_was_sorted_) {
    std::vector<VarietyPoint> sorted;
    sorted.reserve(points_.size());
    for (int idx : order) sorted.push_back(std::move(points_[static_cast<size_t>(idx)]));
    points_ = std::move(sorted);
  }

  for (size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].z == points_[i - 1].z) {
      throw DuplicateNodeError("variety contains a repeated node; merge multiplicities instead");
    }
  }

  mult_prefix_.resize(points_.size());
  long acc = 0;
  for (size_t i = 0; i < points_.size(); ++i) {
    acc += points_[i].mult;
    mult_prefix_[i] = acc;
  }
}

MultiplicityVariety MultiplicityVariety::from_doubles(
    const std::vector<std::pair<std::complex<double>, int>>& points, int n_max) {
  std::vector<std::pair<BigComplex, int>> big;
  big.reserve(points.size());
  for (const auto& [z, m] : points) big.emplace_back(BigComplex(z, kStoragePrecision), m);
  return MultiplicityVariety(std::move(big), n_max);
}

long MultiplicityVariety::total_mult(int q) const {
  if (q < 0 || q > size()) throw ValidationError("prefix length out of range");
  return q == 0 ? 0 : mult_prefix_[static_cast<size_t>(q - 1)];
}

long MultiplicityVariety::slot_index(int j, int l) const {
  if (j < 0 || j >= size()) throw ValidationError("point index out of range");
  if (l < 0 || l >= points_[static_cast<size_t>(j)].mult) {
    throw ValidationError("derivative slot out of range");
  }
  return total_mult(j) + l;
}

int MultiplicityVariety::octave_count(int n) const {
  if (n < 0) throw ValidationError("octave index must be non-negative");
  if (n_max_ != kComplete && n > n_max_) {
    throw TruncationError("octave extends beyond the trusted radius of the variety");
  }
  int q = 0;
  while (q < size() && radius_in_octave(points_[static_cast<size_t>(q)].radius, n)) ++q;
  return q;
}

int MultiplicityVariety::count_within(double r) const {
  int q = 0;
  while (q < size() && points_[static_cast<size_t>(q)].radius <= r) ++q;
  return q;
}

namespace {

void check_disc_trusted(const MultiplicityVariety& V, std::complex<double> z, double r) {
  if (V.complete()) return;
  const double reach = std::abs(z) + r;
  if (reach > std::ldexp(1.0, V.n_max())) {
    throw TruncationError("query disc leaves the trusted radius of the variety");
  }
}

}  // namespace

long counting_n(const MultiplicityVariety& V, std::complex<double> z, double r) {
  if (!(r >= 0.0)) throw ValidationError("counting radius must be non-negative");
  check_disc_trusted(V, z, r);
  long total = 0;
  for (int j = 0; j < V.size(); ++j) {
    const auto& p = V.point(j);
    if (std::abs(p.zd - z) <= r) total += p.mult;
  }
  return total;
}

double counting_N(const MultiplicityVariety& V, std::complex<double> z, double r) {
  if (!(r > 0.0)) throw ValidationError("integrated counting needs a positive radius");
  check_disc_trusted(V, z, r);
  double acc = 0.0;
  long at_center = 0;
  for (int j = 0; j < V.size(); ++j) {
    const auto& p = V.point(j);
    const double d = std::abs(p.zd - z);
    if (d == 0.0) {
      at_center += p.mult;
    } else if (d <= r) {
      acc += p.mult * std::log(r / d);
    }
  }
  if (at_center > 0) acc += static_cast<double>(at_center) * std::log(r);
  return acc;
}

JensenCheck jensen_check(const MultiplicityVariety& zeros, std::complex<double> leading,
                         double R, int quad_points) {
  if (!(R > 0.0)) throw ValidationError("circle radius must be positive");
  if (quad_points < 8) throw ValidationError("need at least 8 quadrature nodes");
  if (leading == std::complex<double>(0.0, 0.0)) {
    throw ValidationError("leading coefficient must be nonzero");
  }

  JensenCheck out;
  out.lhs = counting_N(zeros, {0.0, 0.0}, R) + std::log(std::abs(leading));
  for (int j = 0; j < zeros.size(); ++j) {
    const auto& p = zeros.point(j);
    if (p.radius_d > 0.0) out.lhs += p.mult * std::log(p.radius_d);
  }

  // Trapezoid rule on a periodic integrand collapses to the node mean.
  const double near = 1e-12 * R;
  double mean = 0.0;
  for (int k = 0; k < quad_points; ++k) {
    const double theta = 2.0 * std::acos(-1.0) * k / quad_points;
    const std::complex<double> w(R * std::cos(theta), R * std::sin(theta));
    double lnf = std::log(std::abs(leading));
    for (int j = 0; j < zeros.size(); ++j) {
      const auto& p = zeros.point(j);
      const double d = std::abs(w - p.zd);
      if (d < near) {
        throw SingularQuadratureError("quadrature node falls on a zero of the integrand");
      }
      lnf += p.mult * std::log(d);
    }
    mean += lnf;
  }
  out.rhs = mean / quad_points;
  out.abs_err = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace varkit
