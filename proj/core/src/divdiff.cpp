#include "varkit/divdiff.hpp"

#include <algorithm>

#include "jet.hpp"
#include "varkit/errors.hpp"

namespace varkit {

namespace {

void check_precision(mpfr_prec_t prec) {
  if (prec < kMinPrecision) throw ValidationError("precision below the supported minimum");
}

/// Taylor jet (orders 0..L) at x of the interpolant assembled from the first
/// q rows of phi, by the backward Horner recurrence
///   B_q = 0,   B_j = inner_j + (d_j + t)^{m_j} B_{j+1},   d_j = x - z_j,
/// where inner_j collects row j of phi in powers of (d_j + t).
void taylor_jet(const MultiplicityVariety& V,
                const std::vector<std::vector<BigComplex>>& phi, int q, const BigComplex& x,
                detail::Jet& B) {
  const mpfr_prec_t prec = B[0].prec();
  const int L = static_cast<int>(B.size()) - 1;
  detail::jet_zero(B);

  BigComplex d(prec), scratch(prec);
  detail::Jet inner = detail::make_jet(L, prec);
  detail::Jet factor = detail::make_jet(L, prec);
  detail::Jet tmp = detail::make_jet(L, prec);

  for (int j = q - 1; j >= 0; --j) {
    const auto& row = phi[static_cast<size_t>(j)];
    const int m = static_cast<int>(row.size());
    d = x;
    d -= V.point(j).z.rounded(prec);

    if (L == 0) {
      // Scalar fast path: B = inner + d^m B.
      inner[0] = row[static_cast<size_t>(m - 1)].rounded(prec);
      for (int l = m - 2; l >= 0; --l) {
        BigComplex::mul(scratch, inner[0], d);
        scratch += row[static_cast<size_t>(l)];
        std::swap(inner[0], scratch);
      }
      for (int e = 0; e < m; ++e) {
        BigComplex::mul(scratch, B[0], d);
        std::swap(B[0], scratch);
      }
      B[0] += inner[0];
      continue;
    }

    detail::jet_zero(inner);
    inner[0] = row[static_cast<size_t>(m - 1)].rounded(prec);
    for (int l = m - 2; l >= 0; --l) {
      detail::jet_mul_linear(inner, d, scratch);
      inner[0] += row[static_cast<size_t>(l)];
    }
    detail::jet_binomial_power(factor, d, m, scratch);
    detail::jet_mul_trunc(tmp, B, factor, scratch);
    std::swap(B, tmp);
    for (int i = 0; i <= L; ++i) B[static_cast<size_t>(i)] += inner[static_cast<size_t>(i)];
  }
}

/// Confluent divided-difference column over flattened slots.  grp maps each
/// slot to its node group, node[i] points at that group's rounded node, and
/// taylor[g][k] supplies the k-th Taylor coefficient of the data at group g.
/// Windows confined to one group copy their Taylor datum directly.  The
/// left-anchored coefficients (slot order) land in *harvest when requested;
/// the return value is the top coefficient.
BigComplex column_pass(const std::vector<const BigComplex*>& node, const std::vector<int>& grp,
                       const std::vector<std::vector<BigComplex>>& taylor, mpfr_prec_t prec,
                       std::vector<BigComplex>* harvest) {
  const long M = static_cast<long>(grp.size());
  std::vector<BigComplex> col;
  col.reserve(static_cast<size_t>(M));
  for (long i = 0; i < M; ++i) {
    col.push_back(taylor[static_cast<size_t>(grp[static_cast<size_t>(i)])][0]);
  }
  if (harvest) {
    harvest->clear();
    harvest->reserve(static_cast<size_t>(M));
    harvest->push_back(col[0]);
  }
  BigComplex denom(prec), scratch(prec);
  for (long k = 1; k < M; ++k) {
    for (long i = M - 1; i >= k; --i) {
      const size_t si = static_cast<size_t>(i);
      const size_t sk = static_cast<size_t>(i - k);
      if (grp[si] == grp[sk]) {
        col[si] = taylor[static_cast<size_t>(grp[si])][static_cast<size_t>(k)];
        continue;
      }
      col[si] -= col[si - 1];
      denom = *node[si];
      denom -= *node[sk];
      if (denom.is_zero()) {
        throw DuplicateNodeError("coincident nodes encountered while building the table");
      }
      if (denom.im().is_zero()) {
        // Real node spacing: divide componentwise.
        mpfr_div(col[si].re().raw(), col[si].re().raw(), denom.re().raw(), MPFR_RNDN);
        mpfr_div(col[si].im().raw(), col[si].im().raw(), denom.re().raw(), MPFR_RNDN);
      } else {
        BigComplex::div(scratch, col[si], denom);
        std::swap(col[si], scratch);
      }
    }
    if (harvest) harvest->push_back(col[static_cast<size_t>(k)]);
  }
  return col[static_cast<size_t>(M - 1)];
}

}  // namespace

DividedDifferenceTable phi_table(const MultiplicityVariety& V, const ValueSequence& W, int q,
                                 mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  if (q < 1 || q > V.size()) throw ValidationError("prefix length out of range");
  if (W.points() < q) throw ValidationError("value sequence shorter than requested prefix");
  for (int j = 0; j < q; ++j) {
    if (W.width(j) != V.point(j).mult) {
      throw ValidationError("value sequence shape does not match the variety");
    }
  }

  // Classic confluent column on the stored Taylor data.  The residual form
  // (w_q - P(z_q)) / prod(z_q - z_k) is algebraically equivalent but loses
  // accuracy catastrophically on long tables with decaying coefficients: the
  // Horner evaluation of P passes through intermediates exponentially larger
  // than the coefficient the residual must resolve, while the column never
  // amplifies above the data scale of each window.
  std::vector<BigComplex> nodes_rounded;
  nodes_rounded.reserve(static_cast<size_t>(q));
  std::vector<std::vector<BigComplex>> taylor(static_cast<size_t>(q));
  std::vector<int> grp;
  for (int j = 0; j < q; ++j) {
    nodes_rounded.push_back(V.point(j).z.rounded(precision_bits));
    const int m = V.point(j).mult;
    auto& row = taylor[static_cast<size_t>(j)];
    row.reserve(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l) {
      row.push_back(W.at(j, l).rounded(precision_bits));
      grp.push_back(j);
    }
  }
  std::vector<const BigComplex*> node;
  node.reserve(grp.size());
  for (const int g : grp) node.push_back(&nodes_rounded[static_cast<size_t>(g)]);

  std::vector<BigComplex> flat;
  column_pass(node, grp, taylor, precision_bits, &flat);

  DividedDifferenceTable T;
  T.precision_bits = precision_bits;
  T.phi.resize(static_cast<size_t>(q));
  size_t i = 0;
  for (int j = 0; j < q; ++j) {
    auto& row = T.phi[static_cast<size_t>(j)];
    const int m = V.point(j).mult;
    row.reserve(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l, ++i) row.push_back(std::move(flat[i]));
  }
  return T;
}

BigComplex newton_eval(const MultiplicityVariety& V, const DividedDifferenceTable& T, int q,
                       const BigComplex& z, int l) {
  check_precision(T.precision_bits);
  if (q < 0 || q > T.points()) throw ValidationError("prefix length out of range");
  if (l < 0) throw ValidationError("derivative order must be non-negative");
  if (q == 0) return BigComplex::zero(T.precision_bits);
  detail::Jet B = detail::make_jet(l, T.precision_bits);
  taylor_jet(V, T.phi, q, z.rounded(T.precision_bits), B);
  return B[static_cast<size_t>(l)];
}

ValueSequence restriction_values(const FunctionOracle& f, const MultiplicityVariety& V,
                                 mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  ValueSequence W(V, precision_bits);
  for (int j = 0; j < V.size(); ++j) {
    const BigComplex x = V.point(j).z.rounded(precision_bits);
    for (int l = 0; l < V.point(j).mult; ++l) {
      if (l > f.max_order) throw OrderError("oracle cannot provide the requested derivative");
      W.set(j, l, f.taylor(x, l, precision_bits));
    }
  }
  return W;
}

namespace {

/// Shared confluent divided-difference engine over a flattened node sequence.
/// groups = (node, repetition); harvest, when nonnull, receives the
/// left-anchored coefficients (orders 0..M-1) as they stabilize.
BigComplex confluent_engine(const FunctionOracle& f,
                            const std::vector<std::pair<BigComplex, int>>& groups,
                            mpfr_prec_t prec, std::vector<BigComplex>* harvest) {
  long M = 0;
  for (const auto& [x, r] : groups) {
    if (r < 1) throw ValidationError("node repetition count must be positive");
    if (r - 1 > f.max_order) throw OrderError("oracle cannot provide the requested derivative");
    M += r;
  }
  if (M == 0) throw ValidationError("need at least one node");
  for (size_t a = 0; a + 1 < groups.size(); ++a) {
    for (size_t b = a + 1; b < groups.size(); ++b) {
      if (groups[a].first.rounded(prec) == groups[b].first.rounded(prec)) {
        throw DuplicateNodeError("repeated node group; merge repetition counts instead");
      }
    }
  }

  // Taylor data per group: taylor[g][k] = f^{(k)}(x_g)/k!, k < r_g.
  std::vector<std::vector<BigComplex>> taylor(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    const BigComplex xg = groups[g].first.rounded(prec);
    taylor[g].reserve(static_cast<size_t>(groups[g].second));
    for (int k = 0; k < groups[g].second; ++k) taylor[g].push_back(f.taylor(xg, k, prec));
  }

  // Flattened view: group index per slot.
  std::vector<int> grp(static_cast<size_t>(M));
  std::vector<const BigComplex*> node(static_cast<size_t>(M));
  std::vector<BigComplex> nodes_rounded(groups.size(), BigComplex(prec));
  for (size_t g = 0; g < groups.size(); ++g) nodes_rounded[g] = groups[g].first.rounded(prec);
  {
    long i = 0;
    for (size_t g = 0; g < groups.size(); ++g) {
      for (int r = 0; r < groups[g].second; ++r, ++i) {
        grp[static_cast<size_t>(i)] = static_cast<int>(g);
        node[static_cast<size_t>(i)] = &nodes_rounded[g];
      }
    }
  }

  return column_pass(node, grp, taylor, prec, harvest);
}

}  // namespace

BigComplex hermite_divdiff(const FunctionOracle& f,
                           const std::vector<std::pair<BigComplex, int>>& groups,
                           mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  return confluent_engine(f, groups, precision_bits, nullptr);
}

DividedDifferenceTable restriction_table(const FunctionOracle& f, const MultiplicityVariety& V,
                                         int q, mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  if (q < 1 || q > V.size()) throw ValidationError("prefix length out of range");
  std::vector<std::pair<BigComplex, int>> groups;
  groups.reserve(static_cast<size_t>(q));
  for (int j = 0; j < q; ++j) groups.emplace_back(V.point(j).z, V.point(j).mult);

  std::vector<BigComplex> flat;
  confluent_engine(f, groups, precision_bits, &flat);

  DividedDifferenceTable T;
  T.precision_bits = precision_bits;
  T.phi.resize(static_cast<size_t>(q));
  size_t i = 0;
  for (int j = 0; j < q; ++j) {
    auto& row = T.phi[static_cast<size_t>(j)];
    for (int l = 0; l < V.point(j).mult; ++l, ++i) row.push_back(std::move(flat[i]));
  }
  return T;
}

}  // namespace varkit
