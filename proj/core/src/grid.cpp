#include "varkit/grid.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>

#include "varkit/errors.hpp"

namespace varkit {

GridSpec GridSpec::polar(int rings, int sectors, double rmax) {
  if (rings < 1 || sectors < 1) throw ValidationError("polar grid needs rings >= 1, sectors >= 1");
  if (!(rmax > 0.0)) throw ValidationError("polar grid needs rmax > 0");
  GridSpec g;
  g.kind = Kind::Polar;
  g.rings = rings;
  g.sectors = sectors;
  g.rmax = rmax;
  return g;
}

GridSpec GridSpec::cartesian(int nx, int ny, double extent) {
  if (nx < 2 || ny < 2) throw ValidationError("cartesian grid needs nx >= 2, ny >= 2");
  if (!(extent > 0.0)) throw ValidationError("cartesian grid needs extent > 0");
  GridSpec g;
  g.kind = Kind::Cartesian;
  g.nx = nx;
  g.ny = ny;
  g.extent = extent;
  return g;
}

GridSpec GridSpec::parse(const std::string& text) {
  std::map<std::string, double> kv;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("grid item '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    char* end = nullptr;
    const double x = std::strtod(val.c_str(), &end);
    if (end == nullptr || *end != '\0' || val.empty()) {
      throw ParseError("grid value '" + val + "' is not a number");
    }
    if (!kv.emplace(key, x).second) throw ParseError("grid key '" + key + "' repeated");
    pos = comma + 1;
  }
  auto take = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(std::string("grid is missing key '") + key + "'");
    const double v = it->second;
    kv.erase(it);
    return v;
  };
  if (kv.count("rings")) {
    const int rings = static_cast<int>(take("rings"));
    const int sectors = static_cast<int>(take("sectors"));
    const double rmax = take("rmax");
    if (!kv.empty()) throw ParseError("unknown grid key '" + kv.begin()->first + "'");
    return polar(rings, sectors, rmax);
  }
  if (kv.count("nx")) {
    const int nx = static_cast<int>(take("nx"));
    const int ny = static_cast<int>(take("ny"));
    const double extent = take("extent");
    if (!kv.empty()) throw ParseError("unknown grid key '" + kv.begin()->first + "'");
    return cartesian(nx, ny, extent);
  }
  throw ParseError("grid must specify rings=..,sectors=..,rmax=.. or nx=..,ny=..,extent=..");
}

double GridSpec::spacing() const {
  if (kind == Kind::Polar) return rmax / rings;
  return 2.0 * extent / (nx - 1);
}

long GridSpec::point_count() const {
  if (kind == Kind::Polar) return static_cast<long>(rings) * sectors;
  return static_cast<long>(nx) * ny;
}

std::vector<std::complex<double>> GridSpec::enumerate() const {
  std::vector<std::complex<double>> pts;
  pts.reserve(static_cast<size_t>(point_count()));
  if (kind == Kind::Polar) {
    const double two_pi = 2.0 * std::acos(-1.0);
    for (int i = 1; i <= rings; ++i) {
      const double r = rmax * i / rings;
      for (int s = 0; s < sectors; ++s) {
        const double theta = two_pi * s / sectors;
        pts.emplace_back(r * std::cos(theta), r * std::sin(theta));
      }
    }
  } else {
    for (int iy = 0; iy < ny; ++iy) {
      const double y = -extent + 2.0 * extent * iy / (ny - 1);
      for (int ix = 0; ix < nx; ++ix) {
        const double x = -extent + 2.0 * extent * ix / (nx - 1);
        pts.emplace_back(x, y);
      }
    }
  }
  return pts;
}

std::string GridSpec::describe() const {
  char buf[128];
  if (kind == Kind::Polar) {
    std::snprintf(buf, sizeof(buf), "rings=%d,sectors=%d,rmax=%.17g", rings, sectors, rmax);
  } else {
    std::snprintf(buf, sizeof(buf), "nx=%d,ny=%d,extent=%.17g", nx, ny, extent);
  }
  return buf;
}

}  // namespace varkit
