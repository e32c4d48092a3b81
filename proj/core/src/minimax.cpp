#include "varkit/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "varkit/errors.hpp"

namespace varkit {

namespace {

// Cross product (b-a) x (c-a); positive when c is left of a->b.
double cross(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Slopes of the edges of both hulls of the point set.  The Chebyshev width
// as a function of the slope is piecewise linear and convex with breakpoints
// exactly at these slopes, so the minimum is attained at one of them.
std::vector<double> candidate_slopes(std::vector<AffinePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const AffinePoint& a, const AffinePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const AffinePoint& a, const AffinePoint& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());

  std::vector<double> slopes;
  auto add_hull_slopes = [&](bool upper) {
    std::vector<AffinePoint> hull;
    for (const auto& p : pts) {
      while (hull.size() >= 2) {
        const double c = cross(hull[hull.size() - 2], hull[hull.size() - 1], p);
        if (upper ? (c >= 0.0) : (c <= 0.0)) {
          hull.pop_back();
        } else {
          break;
        }
      }
      hull.push_back(p);
    }
    for (size_t i = 1; i < hull.size(); ++i) {
      const double dx = hull[i].x - hull[i - 1].x;
      if (dx != 0.0) slopes.push_back((hull[i].y - hull[i - 1].y) / dx);
    }
  };
  add_hull_slopes(true);
  add_hull_slopes(false);
  slopes.push_back(0.0);  // harmless extra candidate; keeps degenerate sets sane
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  return slopes;
}

}  // namespace

AffineMinimaxFit minimax_affine_upper(const std::vector<AffinePoint>& pts) {
  AffineMinimaxFit fit;
  if (pts.empty()) return fit;
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("minimax fit requires finite samples");
    }
  }

  const auto slopes = candidate_slopes(pts);
  double best_width = std::numeric_limits<double>::infinity();
  double best_slope = 0.0;
  for (const double a : slopes) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
      const double r = p.y - a * p.x;
      hi = std::max(hi, r);
      lo = std::min(lo, r);
    }
    const double width = hi - lo;
    if (width < best_width ||
        (width == best_width && std::fabs(a) < std::fabs(best_slope))) {
      best_width = width;
      best_slope = a;
    }
  }

  fit.slope = best_slope;
  fit.width = best_width;
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& p : pts) hi = std::max(hi, p.y - best_slope * p.x);
  fit.intercept = hi;
  fit.margins.reserve(pts.size());
  for (const auto& p : pts) fit.margins.push_back(p.y - (best_slope * p.x + fit.intercept));
  return fit;
}

}  // namespace varkit
