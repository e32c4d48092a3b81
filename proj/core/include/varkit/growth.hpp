#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "varkit/bigfloat.hpp"
#include "varkit/divdiff.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"
#include "varkit/weight.hpp"

namespace varkit {

enum class Verdict { Bounded, Divergent, Inconclusive };
const char* to_string(Verdict v);

struct GrowthSample {
  double x = 0.0;  // weight value p(2^n) or p(z_j)
  double y = 0.0;  // log of the quantity being bounded
  long label = 0;  // octave index (or octave bucket for per-point data)
};

/// Tunable constants of the deterministic verdict rule.  The defaults are
/// part of the tested contract; see fit_growth for the exact procedure.
struct VerdictRule {
  int tail_octaves = 5;            // K: trend window, in envelope samples
  double ratio_step = 1.2;         // per-step growth of y/x that signals divergence
  double divergence_floor = 1.0;   // smallest final y that may signal divergence
  double ratio_slack = 0.01;       // relative slack for "ratio non-increasing"
  double margin_tol = 0.05;        // margin non-increase slack, times the y scale
  double slope_shift_tol = 0.10;   // relative slope change allowed on window shift
  double slope_floor = 0.05;       // absolute slope scale used near zero slope
};

/// Affine upper-envelope fit y <= B_hat * x + ln(A_hat) with a boundedness
/// verdict.  `samples` is the per-label upper envelope of the input data;
/// `margins` are y - B_hat*x - ln(A_hat) over the fitted trailing window,
/// all <= 0 with the maximum exactly 0.
struct GrowthFit {
  std::string condition;
  std::vector<GrowthSample> samples;
  double B_hat = 0.0;
  double A_hat = 1.0;
  double ln_A_hat = 0.0;
  std::vector<double> margins;
  int fit_start = 0;  // index into samples where the fitted window begins
  Verdict verdict = Verdict::Bounded;
  int dropped = 0;  // samples discarded for non-finite y (log of zero)
  int skipped = 0;  // inputs never sampled (origin nodes, untrusted discs)
  double ratio_last = std::numeric_limits<double>::quiet_NaN();  // y/x at last sample
};

/// Reduces raw samples to the per-label upper envelope, fits the minimax
/// affine upper bound on the trailing half, and derives the verdict:
///   1. DIVERGENT if over the last K envelope samples the ratios y/x are
///      positive and each step grows them by the factor ratio_step, y itself
///      increases, and the final y exceeds divergence_floor.
///   2. BOUNDED if the ratios are non-increasing within ratio_slack (then
///      y <= max(y/x) * x holds outright on the tail).
///   3. Otherwise BOUNDED when the fitted margins are non-increasing within
///      margin_tol (relative to the y scale of the window) and the fitted
///      slope moves by less than slope_shift_tol when the window shifts one
///      sample; INCONCLUSIVE when neither pattern is clean.
/// Fewer than three envelope samples are treated as trivially BOUNDED.
GrowthFit fit_growth(std::string condition, std::vector<GrowthSample> raw, int skipped = 0,
                     const VerdictRule& rule = VerdictRule());

/// sup over |z_j| <= 2^n, 0 <= l < m_j of |phi(j,l)| * 2^{n (m_1+...+m_{j-1}+l)}.
/// The table must cover every point of the closed disc of radius 2^n.
BigFloat octave_norm(const MultiplicityVariety& V, const DividedDifferenceTable& T, int n);

/// sup over n in [n_lo, n_hi] of octave_norm(n) * exp(-B p(2^n)).
BigFloat weighted_norm(const MultiplicityVariety& V, const DividedDifferenceTable& T,
                       const Weight& w, double B, int n_lo, int n_hi);

/// Sampling range of octaves lo..hi (inclusive); radii are base^n.  Base 2 is
/// the tested default; other bases apply to the counting-based conditions
/// only (the octave-norm scaling is structurally dyadic).
struct OctaveRange {
  int lo = 0;
  int hi = 0;
  double base = 2.0;
};

/// Condition "integrated counting vs weight": N(0, base^n) <= A p(base^n) + B.
GrowthFit check_condition_1(const MultiplicityVariety& V, const Weight& w, OctaveRange range);

/// Condition "local counting vs weight": N(z_j, |z_j|) <= A p(z_j) + B.
/// Origin nodes and discs leaving the trusted region are skipped and counted.
GrowthFit check_condition_2(const MultiplicityVariety& V, const Weight& w);

/// Raw point count against the weight: n(0, base^n) <= A p(base^n) + B.
GrowthFit count_vs_weight(const MultiplicityVariety& V, const Weight& w, OctaveRange range);

/// Value-sum membership: ln sum_l |w_{j,l}| <= B p(z_j) + ln A.
GrowthFit membership_values(const MultiplicityVariety& V, const ValueSequence& W,
                            const Weight& w);

/// Octave-norm membership: ln octave_norm(n) <= B p(2^n) + ln A over n_lo..n_hi.
GrowthFit membership_table(const MultiplicityVariety& V, const DividedDifferenceTable& T,
                           const Weight& w, int n_lo, int n_hi);

/// Convenience overload that builds the coefficient table for the points of
/// the closed disc of radius 2^{n_hi} first.
GrowthFit membership_table(const MultiplicityVariety& V, const ValueSequence& W,
                           const Weight& w, int n_lo, int n_hi, mpfr_prec_t precision_bits);

}  // namespace varkit
