#include "varkit/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "varkit/errors.hpp"
#include "varkit/minimax.hpp"

namespace varkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded:
      return "BOUNDED";
    case Verdict::Divergent:
      return "DIVERGENT";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

AffineMinimaxFit fit_window(const std::vector<GrowthSample>& samples, size_t start, size_t len) {
  std::vector<AffinePoint> pts;
  pts.reserve(len);
  for (size_t i = start; i < start + len; ++i) pts.push_back({samples[i].x, samples[i].y});
  return minimax_affine_upper(pts);
}

}  // namespace

GrowthFit fit_growth(std::string condition, std::vector<GrowthSample> raw, int skipped,
                     const VerdictRule& rule) {
  GrowthFit fit;
  fit.condition = std::move(condition);
  fit.skipped = skipped;

  // Per-label upper envelope; non-finite logs (zero quantities) are dropped.
  std::map<long, GrowthSample> envelope;
  for (const auto& s : raw) {
    if (!std::isfinite(s.y) || !std::isfinite(s.x)) {
      ++fit.dropped;
      continue;
    }
    auto [it, inserted] = envelope.emplace(s.label, s);
    if (!inserted && s.y > it->second.y) it->second = s;
  }
  fit.samples.reserve(envelope.size());
  for (auto& [label, s] : envelope) fit.samples.push_back(s);

  const size_t n = fit.samples.size();
  if (n > 0) {
    const auto& last = fit.samples.back();
    if (last.x != 0.0) fit.ratio_last = last.y / last.x;
  }
  if (n == 0) return fit;  // trivially bounded: nothing to dominate

  // Fit on the trailing half (at least three samples when available).
  const size_t wlen = std::min(n, std::max((n + 1) / 2, std::min<size_t>(n, 3)));
  const size_t start = n - wlen;
  fit.fit_start = static_cast<int>(start);
  const AffineMinimaxFit base = fit_window(fit.samples, start, wlen);
  fit.B_hat = base.slope;
  fit.ln_A_hat = base.intercept;
  fit.A_hat = std::exp(base.intercept);
  fit.margins = base.margins;

  if (n <= 2) {
    fit.verdict = Verdict::Bounded;
    return fit;
  }

  // Trend analysis over the last K envelope samples.
  const size_t K = std::min<size_t>(static_cast<size_t>(rule.tail_octaves), n);
  const size_t t0 = n - K;
  bool ratios_usable = true;
  for (size_t i = t0; i < n; ++i) {
    if (fit.samples[i].x <= 0.0) {
      ratios_usable = false;
      break;
    }
  }

  if (ratios_usable && K >= 3) {
    bool divergent = fit.samples.back().y >= rule.divergence_floor;
    bool shrinking = true;
    for (size_t i = t0; i + 1 < n && (divergent || shrinking); ++i) {
      const double r0 = fit.samples[i].y / fit.samples[i].x;
      const double r1 = fit.samples[i + 1].y / fit.samples[i + 1].x;
      if (!(r0 > 0.0) || !(r1 >= rule.ratio_step * r0) ||
          !(fit.samples[i + 1].y > fit.samples[i].y)) {
        divergent = false;
      }
      const double slack = std::max(std::fabs(r0) * rule.ratio_slack, 1e-12);
      if (!(r1 <= r0 + slack)) shrinking = false;
    }
    if (divergent) {
      fit.verdict = Verdict::Divergent;
      return fit;
    }
    if (shrinking) {
      // y/x non-increasing on the tail bounds y by (max ratio) * x outright.
      fit.verdict = Verdict::Bounded;
      return fit;
    }
  }

  // Margin trend: non-increasing within a slack proportional to the data
  // scale of the window (so log-scale wiggles of a few units do not defeat
  // fits whose values span thousands).
  double scale = 1.0;
  for (size_t i = start; i < n; ++i) scale = std::max(scale, std::fabs(fit.samples[i].y));
  const size_t mtail = std::min(K, fit.margins.size());
  bool margins_ok = true;
  for (size_t i = fit.margins.size() - mtail; i + 1 < fit.margins.size(); ++i) {
    if (fit.margins[i + 1] > fit.margins[i] + rule.margin_tol * scale) {
      margins_ok = false;
      break;
    }
  }

  bool slope_stable = true;
  if (start > 0) {
    const AffineMinimaxFit shifted = fit_window(fit.samples, start - 1, wlen);
    const double denom = std::max(std::fabs(fit.B_hat), rule.slope_floor);
    slope_stable = std::fabs(shifted.slope - fit.B_hat) <= rule.slope_shift_tol * denom;
  }

  fit.verdict = (margins_ok && slope_stable) ? Verdict::Bounded : Verdict::Inconclusive;
  return fit;
}

BigFloat octave_norm(const MultiplicityVariety& V, const DividedDifferenceTable& T, int n) {
  if (n < 0) throw ValidationError("octave index must be non-negative");
  const int q = V.octave_count(n);
  if (T.points() < q) {
    throw TruncationError("coefficient table does not cover the requested octave");
  }
  BigFloat sup(T.precision_bits);
  BigFloat term(T.precision_bits);
  for (int j = 0; j < q; ++j) {
    for (int l = 0; l < V.point(j).mult; ++l) {
      term = T.at(j, l).abs();
      term.scale_2exp(static_cast<long>(n) * V.slot_index(j, l));
      if (term > sup) sup = term;
    }
  }
  return sup;
}

BigFloat weighted_norm(const MultiplicityVariety& V, const DividedDifferenceTable& T,
                       const Weight& w, double B, int n_lo, int n_hi) {
  if (n_lo > n_hi) throw ValidationError("empty octave range");
  const mpfr_prec_t prec = T.precision_bits;
  BigFloat sup(prec);
  for (int n = n_lo; n <= n_hi; ++n) {
    BigFloat term = octave_norm(V, T, n);
    BigFloat damp(-B * w.eval_octave(n), prec);
    term *= exp(damp);
    if (n == n_lo || term > sup) sup = term;
  }
  return sup;
}

GrowthFit check_condition_1(const MultiplicityVariety& V, const Weight& w, OctaveRange range) {
  if (range.lo > range.hi) throw ValidationError("empty octave range");
  if (!(range.base > 1.0)) throw ValidationError("octave base must exceed 1");
  std::vector<GrowthSample> samples;
  samples.reserve(static_cast<size_t>(range.hi - range.lo + 1));
  for (int n = range.lo; n <= range.hi; ++n) {
    const double R = range.base == 2.0 ? std::ldexp(1.0, n) : std::pow(range.base, n);
    samples.push_back({w.eval_radius(R), counting_N(V, {0.0, 0.0}, R), n});
  }
  return fit_growth("N0_vs_weight", std::move(samples));
}

namespace {

// Smallest n >= 0 with r <= 2^n, exact at dyadic boundaries.
long octave_bucket(const BigFloat& r) {
  if (r <= 1.0) return 0;
  const long e = r.exponent();  // 2^{e-1} <= r < 2^e
  if (r == BigFloat::pow2(e - 1, r.prec())) return e - 1;
  return e;
}

}  // namespace

GrowthFit check_condition_2(const MultiplicityVariety& V, const Weight& w) {
  std::vector<GrowthSample> samples;
  int skipped = 0;
  const double trust = V.complete() ? std::numeric_limits<double>::infinity()
                                    : std::ldexp(1.0, V.n_max());
  for (int j = 0; j < V.size(); ++j) {
    const auto& p = V.point(j);
    if (p.radius_d == 0.0 || 2.0 * p.radius_d > trust) {
      ++skipped;
      continue;
    }
    samples.push_back(
        {w.eval(p.zd), counting_N(V, p.zd, p.radius_d), octave_bucket(p.radius)});
  }
  if (samples.empty() && V.size() > 0) {
    throw ValidationError("no usable point for the local counting condition");
  }
  return fit_growth("Nlocal_vs_weight", std::move(samples), skipped);
}

GrowthFit count_vs_weight(const MultiplicityVariety& V, const Weight& w, OctaveRange range) {
  if (range.lo > range.hi) throw ValidationError("empty octave range");
  if (!(range.base > 1.0)) throw ValidationError("octave base must exceed 1");
  std::vector<GrowthSample> samples;
  samples.reserve(static_cast<size_t>(range.hi - range.lo + 1));
  for (int n = range.lo; n <= range.hi; ++n) {
    const double R = range.base == 2.0 ? std::ldexp(1.0, n) : std::pow(range.base, n);
    samples.push_back(
        {w.eval_radius(R), static_cast<double>(counting_n(V, {0.0, 0.0}, R)), n});
  }
  return fit_growth("count_vs_weight", std::move(samples));
}

GrowthFit membership_values(const MultiplicityVariety& V, const ValueSequence& W,
                            const Weight& w) {
  if (W.points() != V.size()) throw ValidationError("value sequence does not match the variety");
  std::vector<GrowthSample> samples;
  samples.reserve(static_cast<size_t>(V.size()));
  for (int j = 0; j < V.size(); ++j) {
    const auto& p = V.point(j);
    const BigFloat s = W.slot_abs_sum(j);
    samples.push_back({w.eval(p.zd), log(s).to_double(), octave_bucket(p.radius)});
  }
  return fit_growth("value_sum_vs_weight", std::move(samples));
}

GrowthFit membership_table(const MultiplicityVariety& V, const DividedDifferenceTable& T,
                           const Weight& w, int n_lo, int n_hi) {
  if (n_lo > n_hi) throw ValidationError("empty octave range");
  std::vector<GrowthSample> samples;
  samples.reserve(static_cast<size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    const BigFloat norm = octave_norm(V, T, n);
    samples.push_back({w.eval_octave(n), log(norm).to_double(), n});
  }
  return fit_growth("octave_norm_vs_weight", std::move(samples));
}

GrowthFit membership_table(const MultiplicityVariety& V, const ValueSequence& W,
                           const Weight& w, int n_lo, int n_hi, mpfr_prec_t precision_bits) {
  const int q = V.octave_count(n_hi);
  if (q == 0) return fit_growth("octave_norm_vs_weight", {});
  const DividedDifferenceTable T = phi_table(V, W, q, precision_bits);
  return membership_table(V, T, w, n_lo, n_hi);
}

}  // namespace varkit
