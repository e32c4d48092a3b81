#include "support/support.hpp"

#include <algorithm>
#include <cmath>

#include "varkit/errors.hpp"

namespace testsupport {

using varkit::BigComplex;
using varkit::BigFloat;
using varkit::DividedDifferenceTable;
using varkit::IllConditionedError;
using varkit::MultiplicityVariety;
using varkit::SmoothInterpolant;
using varkit::ValueSequence;

double abs_err(const BigComplex& got, const BigComplex& want) {
  return (got - want).abs().to_double();
}

double rel_err(const BigComplex& got, const BigComplex& want) {
  const double denom = std::max(want.abs().to_double(), 1e-300);
  return abs_err(got, want) / denom;
}

DividedDifferenceTable brute_force_hermite(const MultiplicityVariety& V, const ValueSequence& W,
                                           int q, mpfr_prec_t solve_bits) {
  const int n = static_cast<int>(V.total_mult(q));
  const auto sn = static_cast<size_t>(n);

  // Confluent Vandermonde system: row (j,l) states P^{(l)}(z_j)/l! = w_{j,l},
  // i.e. sum_i C(i,l) z_j^{i-l} c_i = w_{j,l}.
  std::vector<std::vector<BigComplex>> A(sn);
  std::vector<BigComplex> b(sn, BigComplex(solve_bits));
  {
    size_t row = 0;
    for (int j = 0; j < q; ++j) {
      const BigComplex z = V.point(j).z.rounded(solve_bits);
      for (int l = 0; l < V.point(j).mult; ++l, ++row) {
        A[row].assign(sn, BigComplex(solve_bits));
        BigComplex zpow = BigComplex::one(solve_bits);  // z^(i-l)
        for (int i = l; i < n; ++i) {
          BigFloat binom = BigFloat::factorial(i, solve_bits);
          binom /= BigFloat::factorial(l, solve_bits);
          binom /= BigFloat::factorial(i - l, solve_bits);
          A[row][static_cast<size_t>(i)] = zpow * binom;
          BigComplex next(solve_bits);
          BigComplex::mul(next, zpow, z);
          zpow = next;
        }
        b[row] = W.at(j, l).rounded(solve_bits);
      }
    }
  }
  const std::vector<std::vector<BigComplex>> A0 = A;
  const std::vector<BigComplex> b0 = b;

  // Gaussian elimination with partial pivoting.
  for (size_t col = 0; col < sn; ++col) {
    size_t piv = col;
    BigFloat best = A[col][col].abs();
    for (size_t r = col + 1; r < sn; ++r) {
      BigFloat cand = A[r][col].abs();
      if (cand > best) {
        best = cand;
        piv = r;
      }
    }
    if (best.is_zero()) throw IllConditionedError("reference solve hit a zero pivot");
    if (piv != col) {
      std::swap(A[piv], A[col]);
      std::swap(b[piv], b[col]);
    }
    for (size_t r = col + 1; r < sn; ++r) {
      if (A[r][col].is_zero()) continue;
      BigComplex factor(solve_bits);
      BigComplex::div(factor, A[r][col], A[col][col]);
      BigComplex t(solve_bits);
      for (size_t c = col; c < sn; ++c) {
        BigComplex::mul(t, factor, A[col][c]);
        A[r][c] -= t;
      }
      BigComplex::mul(t, factor, b[col]);
      b[r] -= t;
    }
  }
  std::vector<BigComplex> coeff(sn, BigComplex(solve_bits));
  for (size_t rr = sn; rr-- > 0;) {
    BigComplex acc = b[rr];
    BigComplex t(solve_bits);
    for (size_t c = rr + 1; c < sn; ++c) {
      BigComplex::mul(t, A[rr][c], coeff[c]);
      acc -= t;
    }
    BigComplex::div(coeff[rr], acc, A[rr][rr]);
  }

  // Residual sanity on the original system.
  {
    BigFloat tol = BigFloat::pow2(-static_cast<long>(solve_bits) / 3, solve_bits);
    BigComplex t(solve_bits);
    for (size_t r = 0; r < sn; ++r) {
      BigComplex res = b0[r];
      res.negate();
      BigFloat scale(1.0, solve_bits);
      for (size_t c = 0; c < sn; ++c) {
        BigComplex::mul(t, A0[r][c], coeff[c]);
        res += t;
        scale = max(scale, t.abs());
      }
      if (res.abs() > scale * tol) {
        throw IllConditionedError("reference solve residual too large");
      }
    }
  }

  // Change of basis to the Newton layout by repeated synthetic division:
  // dividing by (z - z_j) m_j times peels off exactly the coefficients
  // phi(j, 0..m_j-1).
  DividedDifferenceTable T;
  T.precision_bits = solve_bits;
  std::vector<BigComplex> cur = coeff;
  for (int j = 0; j < q; ++j) {
    const BigComplex z = V.point(j).z.rounded(solve_bits);
    std::vector<BigComplex> row;
    for (int rep = 0; rep < V.point(j).mult; ++rep) {
      const size_t deg = cur.size();
      std::vector<BigComplex> quot(deg > 0 ? deg - 1 : 0, BigComplex(solve_bits));
      BigComplex rem(solve_bits);
      if (deg > 0) {
        BigComplex carry = cur[deg - 1];
        BigComplex t(solve_bits);
        for (size_t i = deg - 1; i-- > 0;) {
          quot[i] = carry;
          BigComplex::mul(t, carry, z);
          carry = cur[i] + t;
        }
        rem = carry;
      }
      row.push_back(rem);
      cur = std::move(quot);
    }
    T.phi.push_back(std::move(row));
  }
  return T;
}

double correction_quadrature(const std::vector<std::pair<double, int>>& nodes, double t,
                             int panels_per_segment) {
  std::vector<std::pair<double, int>> sorted;
  for (const auto& nm : nodes) {
    if (nm.first > 0.0) sorted.push_back(nm);  // the integral sees only r > 0
  }
  std::sort(sorted.begin(), sorted.end());
  const auto integrand = [&](double s) {
    double count = 0.0, moment = 0.0;
    for (const auto& [r, m] : sorted) {
      if (r > s) break;
      count += m;
      moment += m * r;
    }
    return count / s - moment / (s * s);
  };

  // Segment boundaries: node radii inside (0, t], then t itself.  The
  // integrand vanishes below the first radius.
  std::vector<double> cuts;
  for (const auto& [r, m] : sorted) {
    if (r > 0.0 && r < t) cuts.push_back(r);
  }
  cuts.push_back(t);
  if (sorted.empty() || sorted.front().first > t) return 0.0;

  double total = 0.0;
  double lo = cuts.front();
  for (size_t seg = 1; seg < cuts.size(); ++seg) {
    const double hi = cuts[seg];
    const int np = panels_per_segment;
    const double h = (hi - lo) / (2.0 * np);
    double acc = integrand(lo) + integrand(hi);
    for (int k = 1; k < 2 * np; ++k) {
      acc += integrand(lo + h * k) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    total += acc * h / 3.0;
    lo = hi;
  }
  return total;
}

BigComplex wirtinger_fd(const SmoothInterpolant& S, const BigComplex& z, const BigFloat& h) {
  const mpfr_prec_t prec = z.prec() > h.prec() ? z.prec() : h.prec();
  BigComplex zpx = z.rounded(prec), zmx = z.rounded(prec);
  zpx.re() += h;
  zmx.re() -= h;
  BigComplex zpy = z.rounded(prec), zmy = z.rounded(prec);
  zpy.im() += h;
  zmy.im() -= h;

  const BigComplex fx = S.eval_F(zpx) - S.eval_F(zmx);
  const BigComplex fy = S.eval_F(zpy) - S.eval_F(zmy);
  // (fx + i fy) / (4h)
  BigComplex num(prec);
  num.re() = fx.re() - fy.im();
  num.im() = fx.im() + fy.re();
  const BigFloat inv = BigFloat(0.25, prec) / h;
  return num * inv;
}

}  // namespace testsupport
