#pragma once

#include <vector>

namespace varkit {

struct AffinePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Best uniform affine upper envelope: the line y = slope*x + intercept of
/// minimal Chebyshev width max(y - ax) - min(y - ax) over the data, shifted
/// so every margin y_i - (slope*x_i + intercept) is <= 0 with equality at the
/// touching point.
struct AffineMinimaxFit {
  double slope = 0.0;
  double intercept = 0.0;
  double width = 0.0;
  std::vector<double> margins;
};

AffineMinimaxFit minimax_affine_upper(const std::vector<AffinePoint>& pts);

}  // namespace varkit
