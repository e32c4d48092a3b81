#pragma once

#include <complex>
#include <string>
#include <vector>

namespace varkit {

/// Deterministic evaluation grid.  Polar grids enumerate ring-major
/// (r = i*rmax/rings for i = 1..rings, then sectors by ascending angle);
/// cartesian grids enumerate row-major over [-extent, extent]^2.
struct GridSpec {
  enum class Kind { Polar, Cartesian };
  Kind kind = Kind::Polar;
  int rings = 0;
  int sectors = 0;
  double rmax = 0.0;
  int nx = 0;
  int ny = 0;
  double extent = 0.0;

  static GridSpec polar(int rings, int sectors, double rmax);
  static GridSpec cartesian(int nx, int ny, double extent);
  /// Accepts "rings=R,sectors=S,rmax=X" or "nx=A,ny=B,extent=X".
  static GridSpec parse(const std::string& text);

  /// Mesh width: ring spacing for polar grids, cell edge for cartesian ones.
  double spacing() const;
  long point_count() const;
  std::vector<std::complex<double>> enumerate() const;
  std::string describe() const;
};

}  // namespace varkit
