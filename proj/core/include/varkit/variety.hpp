#pragma once

#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "varkit/bigcomplex.hpp"

namespace varkit {

struct VarietyPoint {
  BigComplex z;        // exact node, storage precision
  int mult = 1;        // multiplicity m_j >= 1
  BigFloat radius;     // |z|, storage precision (exact boundary tests)
  std::complex<double> zd;  // node rounded to double
  double radius_d = 0.0;    // |z| rounded to double
};

/// Finite multiplicity variety {(z_j, m_j)}, sorted by |z_j| ascending with
/// ties broken by principal argument ascending, then by input order.  The
/// point list is complete inside the closed disc of radius 2^{n_max};
/// queries that need data beyond that radius raise TruncationError.
class MultiplicityVariety {
public:
  static constexpr int kComplete = std::numeric_limits<int>::max();

  MultiplicityVariety(std::vector<std::pair<BigComplex, int>> points, int n_max);

  static MultiplicityVariety from_doubles(
      const std::vector<std::pair<std::complex<double>, int>>& points, int n_max);

  int size() const { return static_cast<int>(points_.size()); }
  const VarietyPoint& point(int j) const { return points_[static_cast<size_t>(j)]; }
  int n_max() const { return n_max_; }
  bool complete() const { return n_max_ == kComplete; }
  bool origin_present() const { return size() > 0 && points_[0].z.is_zero(); }

  /// True when the constructor input was already in canonical order.
  bool input_was_sorted() const { return input_was_sorted_; }

  /// m_1 + ... + m_q over the first q points.
  long total_mult(int q) const;
  /// Cumulative slot index: m_1 + ... + m_{j-1} + l for 0-based j and
  /// 0 <= l < m_j.
  long slot_index(int j, int l) const;
  /// Number of points with |z_j| <= 2^n (closed disc), for 0 <= n.
  int octave_count(int n) const;
  /// Smallest q such that the first q points contain every point with
  /// |z_j| <= r; equals the count of points with |z_j| <= r.
  int count_within(double r) const;

private:
  std::vector<VarietyPoint> points_;
  std::vector<long> mult_prefix_;  // mult_prefix_[j] = m_1 + ... + m_j
  int n_max_ = kComplete;
  bool input_was_sorted_ = true;
};

/// Counting function n(z, r): total multiplicity inside the closed disc
/// centered at z of radius r >= 0.
long counting_n(const MultiplicityVariety& V, std::complex<double> z, double r);

/// Integrated counting function
///   N(z, r) = sum_{0 < |z - z_j| <= r} m_j ln(r / |z - z_j|) + n(z, 0) ln r,
/// for r > 0.  Negative values (r < 1 with a node at z) are returned as is.
double counting_N(const MultiplicityVariety& V, std::complex<double> z, double r);

struct JensenCheck {
  double lhs = 0.0;  // N(0, R) + ln|c| + sum_{z_j != 0} m_j ln|z_j|
  double rhs = 0.0;  // mean of ln|f| on the circle of radius R
  double abs_err = 0.0;
};

/// Compares the closed-form side of the circle-mean identity for the
/// polynomial f(z) = leading * prod (z - z_j)^{m_j} with trapezoidal
/// quadrature of ln|f| on |z| = R.  The variety must list every zero of f.
JensenCheck jensen_check(const MultiplicityVariety& zeros, std::complex<double> leading,
                         double R, int quad_points = 4096);

}  // namespace varkit
