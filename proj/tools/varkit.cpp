// varkit: command-line diagnostics for multiplicity varieties in weighted
// spaces of entire functions.  Subcommands: generate, check, divdiff, field,
// fit-alpha.  Reports are JSON with sorted keys; all outputs are
// deterministic for a fixed config.
//
// Exit codes: 0 success / all verdicts BOUNDED; 1 validation or input error;
// 2 any DIVERGENT verdict (or no subharmonicity factor below the cap);
// 3 any INCONCLUSIVE verdict; 4 evaluation outside the trusted disc of a
// truncated variety.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "varkit/divdiff.hpp"
#include "varkit/errors.hpp"
#include "varkit/grid.hpp"
#include "varkit/growth.hpp"
#include "varkit/io.hpp"
#include "varkit/smoothing.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"
#include "varkit/version.hpp"
#include "varkit/weight.hpp"

namespace {

using nlohmann::json;
using namespace varkit;

// ---------------------------------------------------------------------------
// config file layering: every long flag can also be given as "name=value" in
// a plain-text config file; explicit flags win.

class ConfigLayer {
 public:
  void load(const std::string& path) { kv_ = load_config(path); }

  bool use(const CLI::Option* opt, const char* key, std::string* raw) const {
    if (opt != nullptr && opt->count() > 0) return false;
    const auto it = kv_.find(key);
    if (it == kv_.end()) return false;
    *raw = it->second;
    return true;
  }

  void apply(const CLI::Option* opt, const char* key, std::string& target) const {
    std::string raw;
    if (use(opt, key, &raw)) target = raw;
  }
  void apply(const CLI::Option* opt, const char* key, int& target) const {
    std::string raw;
    if (use(opt, key, &raw)) target = static_cast<int>(parse_integer(key, raw));
  }
  void apply(const CLI::Option* opt, const char* key, long& target) const {
    std::string raw;
    if (use(opt, key, &raw)) target = parse_integer(key, raw);
  }
  void apply(const CLI::Option* opt, const char* key, double& target) const {
    std::string raw;
    if (use(opt, key, &raw)) {
      char* end = nullptr;
      const double v = std::strtod(raw.c_str(), &end);
      if (end != raw.c_str() + raw.size() || raw.empty()) {
        throw ValidationError("config key '" + std::string(key) + "': expected a number, got '" +
                              raw + "'");
      }
      target = v;
    }
  }

 private:
  static long parse_integer(const char* key, const std::string& raw) {
    long v = 0;
    const auto r = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (r.ec != std::errc() || r.ptr != raw.data() + raw.size()) {
      throw ValidationError("config key '" + std::string(key) + "': expected an integer, got '" +
                            raw + "'");
    }
    return v;
  }

  std::map<std::string, std::string> kv_;
};

// ---------------------------------------------------------------------------
// small parsers

std::pair<int, int> parse_octaves(const std::string& text) {
  const auto dots = text.find("..");
  long lo = 0, hi = 0;
  bool ok = dots != std::string::npos;
  if (ok) {
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    auto ra = std::from_chars(a.data(), a.data() + a.size(), lo);
    auto rb = std::from_chars(b.data(), b.data() + b.size(), hi);
    ok = ra.ec == std::errc() && ra.ptr == a.data() + a.size() && rb.ec == std::errc() &&
         rb.ptr == b.data() + b.size();
  }
  if (!ok) throw ParseError("octave range must look like '4..12', got '" + text + "'");
  if (lo < 0 || hi < lo) throw ValidationError("octave range '" + text + "' is empty or negative");
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::set<int> parse_conditions(const std::string& text) {
  std::set<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok == "1" || tok == "2" || tok == "3") {
      out.insert(tok[0] - '0');
    } else {
      throw ParseError("conditions must be a comma list drawn from 1,2,3; got '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Accepts "polar:R:S" / "cartesian:NX:NY" shorthands (filled with the given
// default radius) and the full "polar:rings=..,sectors=..,rmax=.." /
// "cartesian:nx=..,ny=..,extent=.." forms.
GridSpec parse_grid(const std::string& text, double default_radius) {
  std::string rest = text;
  bool want_polar = false, want_cartesian = false;
  if (rest.rfind("polar:", 0) == 0) {
    want_polar = true;
    rest = rest.substr(6);
  } else if (rest.rfind("cartesian:", 0) == 0) {
    want_cartesian = true;
    rest = rest.substr(10);
  }
  if (rest.find('=') == std::string::npos) {
    const auto colon = rest.find(':');
    long a = 0, b = 0;
    bool ok = colon != std::string::npos && (want_polar || want_cartesian);
    if (ok) {
      const std::string sa = rest.substr(0, colon), sb = rest.substr(colon + 1);
      auto ra = std::from_chars(sa.data(), sa.data() + sa.size(), a);
      auto rb = std::from_chars(sb.data(), sb.data() + sb.size(), b);
      ok = ra.ec == std::errc() && ra.ptr == sa.data() + sa.size() && rb.ec == std::errc() &&
           rb.ptr == sb.data() + sb.size();
    }
    if (!ok) throw ParseError("grid '" + text + "' is neither kind:N:M nor a key=value list");
    return want_polar ? GridSpec::polar(static_cast<int>(a), static_cast<int>(b), default_radius)
                      : GridSpec::cartesian(static_cast<int>(a), static_cast<int>(b),
                                            default_radius);
  }
  GridSpec g = GridSpec::parse(rest);
  if ((want_polar && g.kind != GridSpec::Kind::Polar) ||
      (want_cartesian && g.kind != GridSpec::Kind::Cartesian)) {
    throw ParseError("grid '" + text + "': kind prefix contradicts the key=value fields");
  }
  return g;
}

// Smallest octave covering every node of a complete variety.
int cover_octave(const MultiplicityVariety& V) {
  if (V.size() == 0) return 0;
  const BigFloat& r = V.point(V.size() - 1).radius;
  if (r.is_zero()) return 0;
  const long e = r.exponent();
  const long n = r == BigFloat::pow2(e - 1, r.prec()) ? e - 1 : e;
  return static_cast<int>(std::max(0L, n));
}

// Default evaluation radius: just inside the trusted disc for truncated
// varieties (63/64 of it, dodging boundary roundoff), or twice the outermost
// node for complete ones.
double default_radius(const MultiplicityVariety& V, int trust_shift) {
  if (!V.complete()) return std::ldexp(63.0 / 64.0, V.n_max() - trust_shift);
  double r = 4.0;
  if (V.size() > 0) r = std::max(r, 2.0 * V.point(V.size() - 1).radius_d);
  return r;
}

// ---------------------------------------------------------------------------
// report plumbing

json fit_to_json(const GrowthFit& f) {
  json samples = json::array();
  for (const auto& s : f.samples) {
    samples.push_back(json{{"x", s.x}, {"y", s.y}, {"label", s.label}});
  }
  return json{{"condition", f.condition},
              {"samples", samples},
              {"B_hat", f.B_hat},
              {"A_hat", f.A_hat},
              {"ln_A_hat", f.ln_A_hat},
              {"margins", f.margins},
              {"fit_start", f.fit_start},
              {"verdict", to_string(f.verdict)},
              {"dropped", f.dropped},
              {"skipped", f.skipped},
              {"ratio_last", f.ratio_last}};
}

void write_report(const std::string& path, const json& report) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << report.dump(2) << '\n';
  if (!out) throw Error("failed writing '" + path + "'");
}

int verdict_exit_code(const std::vector<GrowthFit>& fits) {
  int code = 0;
  for (const auto& f : fits) {
    if (f.verdict == Verdict::Divergent) return 2;
    if (f.verdict == Verdict::Inconclusive) code = 3;
  }
  return code;
}

const char* overall_verdict(const std::vector<GrowthFit>& fits) {
  bool inconclusive = false;
  for (const auto& f : fits) {
    if (f.verdict == Verdict::Divergent) return "DIVERGENT";
    if (f.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? "INCONCLUSIVE" : "BOUNDED";
}

// ---------------------------------------------------------------------------
// subcommand parameter blocks

struct GenerateArgs {
  std::string kind;
  long nmax = -1;
  std::string ratio = "2";
  std::string mult = "const:1";
  std::string out;
  std::string config;
};

struct CheckArgs {
  std::string variety;
  std::string values;
  std::string weight;
  std::string conditions;
  std::string octaves;
  double base = 2.0;
  long bits = kDefaultPrecision;
  std::string report;
  std::string config;
};

struct DivdiffArgs {
  std::string variety;
  std::string values;
  long q = 0;  // 0 = all points
  long bits = kDefaultPrecision;
  std::string out;
  std::string report;
  std::string config;
};

struct FieldArgs {
  std::string which;
  std::string variety;
  std::string values;
  std::string grid;
  double alpha = 1.0;
  long bits = kDefaultPrecision;
  std::string out;
  std::string config;
};

struct FitAlphaArgs {
  std::string variety;
  std::string grid;
  double tol = 1e-6;
  double cap = 1048576.0;
  std::string report;
  std::string config;
};

void require_value(const std::string& value, const char* what) {
  if (value.empty()) {
    throw ValidationError(std::string(what) + " is required (flag or config key)");
  }
}

mpfr_prec_t checked_bits(long bits) {
  if (bits < kMinPrecision || bits > 16384) {
    throw ValidationError("precision_bits must lie in [64, 16384], got " + std::to_string(bits));
  }
  return static_cast<mpfr_prec_t>(bits);
}

// ---------------------------------------------------------------------------
// generate

int run_generate(const GenerateArgs& a) {
  require_value(a.kind, "generator kind");
  require_value(a.out, "output path (-o)");
  if (a.nmax < 0 || a.nmax > 24) {
    throw ValidationError("nmax must lie in [0, 24], got " + std::to_string(a.nmax));
  }
  const int nmax = static_cast<int>(a.nmax);

  int const_mult = 1;
  bool linear_mult = false;
  if (a.mult == "linear") {
    linear_mult = true;
  } else if (a.mult.rfind("const:", 0) == 0) {
    const std::string k = a.mult.substr(6);
    long v = 0;
    const auto r = std::from_chars(k.data(), k.data() + k.size(), v);
    if (r.ec != std::errc() || r.ptr != k.data() + k.size() || v < 1 || v > 64) {
      throw ValidationError("mult rule 'const:K' needs integer K in [1, 64], got '" + a.mult +
                            "'");
    }
    const_mult = static_cast<int>(v);
  } else {
    throw ValidationError("mult rule must be 'const:K' or 'linear', got '" + a.mult + "'");
  }

  const mpfr_prec_t prec = kStoragePrecision;
  const BigFloat limit = BigFloat::pow2(nmax, prec);
  std::vector<std::pair<BigComplex, int>> points;
  auto mult_of = [&](size_t idx) {
    return linear_mult ? static_cast<int>(idx + 1) : const_mult;
  };

  if (a.kind == "pi_lattice") {
    const BigFloat pi = BigFloat::pi(prec);
    points.emplace_back(BigComplex(prec), mult_of(0));  // the origin, pi*0
    for (long k = 1;; ++k) {
      BigFloat r = pi;
      r *= static_cast<double>(k);
      if (r > limit) break;
      BigComplex zp(prec), zm(prec);
      zp.re() = r;
      r.negate();
      zm.re() = r;
      points.emplace_back(std::move(zp), mult_of(points.size()));
      points.emplace_back(std::move(zm), mult_of(points.size()));
    }
  } else if (a.kind == "integers") {
    const long count = 1L << nmax;
    for (long k = 1; k <= count; ++k) {
      BigComplex z(prec);
      z.re() = BigFloat(static_cast<double>(k), prec);
      points.emplace_back(std::move(z), mult_of(points.size()));
    }
  } else if (a.kind == "geometric") {
    const BigFloat ratio = BigFloat::parse(a.ratio, prec);
    if (!(ratio > 1.0)) {
      throw ValidationError("geometric ratio must exceed 1, got '" + a.ratio + "'");
    }
    BigFloat r = ratio;
    while (!(r > limit)) {
      if (points.size() >= (1u << 22)) {
        throw ValidationError("geometric generator would emit too many points; "
                              "raise the ratio or lower nmax");
      }
      BigComplex z(prec);
      z.re() = r;
      points.emplace_back(std::move(z), mult_of(points.size()));
      r = r * ratio;
    }
  } else {
    throw ValidationError("unknown generator kind '" + a.kind +
                          "' (expected pi_lattice, integers or geometric)");
  }

  MultiplicityVariety V(std::move(points), nmax);
  save_variety(a.out, V);
  std::cout << kVersion << " generate: " << V.size() << " points, nmax " << nmax << " -> "
            << a.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check

int run_check(const CheckArgs& a) {
  require_value(a.variety, "variety path");
  require_value(a.weight, "--weight");
  const Weight w = Weight::parse(a.weight);
  const mpfr_prec_t bits = checked_bits(a.bits);
  if (!(a.base > 1.0)) throw ValidationError("octave base must exceed 1");

  VarietyLoadInfo info;
  const MultiplicityVariety V = load_variety(a.variety, kStoragePrecision, &info);
  if (!info.was_sorted) {
    std::cerr << "note: variety file was not in canonical order; it has been re-sorted\n";
  }

  const bool have_values = !a.values.empty();
  std::string conditions = a.conditions;
  if (conditions.empty()) conditions = have_values ? "1,2,3" : "1,2";
  const std::set<int> wanted = parse_conditions(conditions);
  if (wanted.count(3) != 0 && !have_values) {
    throw ValidationError("condition 3 needs a value file (second positional argument)");
  }

  int lo = 0, hi = 0;
  if (!a.octaves.empty()) {
    std::tie(lo, hi) = parse_octaves(a.octaves);
    if (!V.complete() && hi > V.n_max()) {
      throw ValidationError("octave range reaches " + std::to_string(hi) +
                            " but the variety is truncated at nmax " + std::to_string(V.n_max()));
    }
  } else {
    hi = V.complete() ? cover_octave(V) : std::min(V.n_max(), 12);
    lo = std::min(4, hi);
  }
  const OctaveRange range{lo, hi, a.base};

  std::vector<GrowthFit> fits;
  if (wanted.count(1) != 0) fits.push_back(check_condition_1(V, w, range));
  if (wanted.count(2) != 0) fits.push_back(check_condition_2(V, w));
  fits.push_back(count_vs_weight(V, w, range));
  if (have_values) {
    const ValueSequence W = load_values(a.values, V, kStoragePrecision);
    if (wanted.count(3) != 0) {
      fits.push_back(membership_table(V, W, w, lo, hi, bits));
      fits.push_back(membership_values(V, W, w));
    }
  }

  const int code = verdict_exit_code(fits);
  json report{{"version", kVersion},
              {"command", "check"},
              {"config", json{{"variety", a.variety},
                              {"values", a.values},
                              {"weight", w.spelling()},
                              {"conditions", conditions},
                              {"octaves", std::to_string(lo) + ".." + std::to_string(hi)},
                              {"base", a.base},
                              {"bits", static_cast<long>(bits)}}},
              {"fits", json::array()},
              {"verdict", overall_verdict(fits)},
              {"exit_code", code}};
  for (const auto& f : fits) report["fits"].push_back(fit_to_json(f));
  write_report(a.report, report);

  for (const auto& f : fits) {
    std::cout << f.condition << ": " << to_string(f.verdict)
              << " B_hat=" << format_double(f.B_hat)
              << " ln_A_hat=" << format_double(f.ln_A_hat)
              << " ratio_last=" << format_double(f.ratio_last) << "\n";
  }
  std::cout << kVersion << " check: " << overall_verdict(fits) << "\n";
  return code;
}

// ---------------------------------------------------------------------------
// divdiff

int run_divdiff(const DivdiffArgs& a) {
  require_value(a.variety, "variety path");
  require_value(a.values, "value path");
  require_value(a.out, "output path (-o)");
  const mpfr_prec_t bits = checked_bits(a.bits);

  const MultiplicityVariety V = load_variety(a.variety);
  const ValueSequence W = load_values(a.values, V, kStoragePrecision);
  const int q = a.q == 0 ? V.size() : static_cast<int>(a.q);
  if (q < 1 || q > V.size()) {
    throw ValidationError("--q must lie in 1.." + std::to_string(V.size()));
  }

  const DividedDifferenceTable T = phi_table(V, W, q, bits);
  save_table(a.out, V, T);
  const long rows = V.total_mult(q);

  json report{{"version", kVersion},
              {"command", "divdiff"},
              {"config", json{{"variety", a.variety},
                              {"values", a.values},
                              {"q", q},
                              {"bits", static_cast<long>(bits)},
                              {"out", a.out}}},
              {"points", q},
              {"rows", rows}};
  write_report(a.report, report);
  std::cout << kVersion << " divdiff: " << rows << " rows (" << q << " points) at " << bits
            << " bits -> " << a.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// field

int run_field(const FieldArgs& a) {
  require_value(a.which, "field name (F, dbarF or U)");
  require_value(a.variety, "variety path");
  require_value(a.grid, "--grid");
  require_value(a.out, "output path (-o)");
  const mpfr_prec_t bits = checked_bits(a.bits);
  if (a.which != "F" && a.which != "dbarF" && a.which != "U") {
    throw ValidationError("field must be F, dbarF or U, got '" + a.which + "'");
  }
  const bool need_values = a.which != "U";
  if (need_values && a.values.empty()) {
    throw ValidationError("field " + a.which + " needs a value file");
  }

  const MultiplicityVariety V = load_variety(a.variety);
  const GridSpec grid = parse_grid(a.grid, default_radius(V, need_values ? 2 : 3));
  const auto points = grid.enumerate();

  std::ofstream out(a.out);
  if (!out) throw Error("cannot open '" + a.out + "' for writing");

  if (need_values) {
    const ValueSequence W = load_values(a.values, V, kStoragePrecision);
    const SmoothInterpolant S(V, W, bits);
    for (const auto& z : points) {
      const BigComplex bz(z, bits);
      const BigComplex v = a.which == "F" ? S.eval_F(bz) : S.eval_dbar_F(bz);
      out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
          << format_double(v.re().to_double()) << ',' << format_double(v.im().to_double())
          << '\n';
    }
  } else {
    if (!(a.alpha > 0.0)) throw ValidationError("--alpha must be positive");
    const Potential P(V);
    for (const auto& z : points) {
      out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
          << format_double(P.eval_U(z, a.alpha)) << '\n';
    }
  }
  if (!out) throw Error("failed writing '" + a.out + "'");
  std::cout << kVersion << " field " << a.which << ": " << points.size() << " points ("
            << grid.describe() << ") -> " << a.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// fit-alpha

int run_fit_alpha(const FitAlphaArgs& a) {
  require_value(a.variety, "variety path");
  require_value(a.grid, "--grid");
  const MultiplicityVariety V = load_variety(a.variety);
  const GridSpec grid = parse_grid(a.grid, default_radius(V, 3));
  const Potential P(V);
  const FitAlphaResult res = P.fit_alpha(grid, a.tol, a.cap);

  json trace = json::array();
  for (const auto& [alpha, min_lap] : res.trace) {
    trace.push_back(json{{"alpha", alpha}, {"min_laplacian", min_lap}});
  }
  json report{{"version", kVersion},
              {"command", "fit-alpha"},
              {"config", json{{"variety", a.variety},
                              {"grid", grid.describe()},
                              {"tol", a.tol},
                              {"cap", a.cap}}},
              {"alpha", res.alpha},
              {"min_laplacian", res.min_laplacian},
              {"worst_point", json{{"re", res.worst_point.real()}, {"im", res.worst_point.imag()}}},
              {"trace", trace},
              {"grid_points_used", res.grid_points_used},
              {"grid_points_excluded", res.grid_points_excluded},
              {"min_laplacian_correction", res.min_laplacian_correction},
              {"spacing", res.spacing}};
  write_report(a.report, report);
  std::cout << kVersion << " fit-alpha: alpha=" << format_double(res.alpha)
            << " min_laplacian=" << format_double(res.min_laplacian)
            << " used=" << res.grid_points_used << " excluded=" << res.grid_points_excluded
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplicity-variety diagnostics in weighted spaces of entire functions"};
  app.set_version_flag("--version", std::string(varkit::kVersion));
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* sub_gen = app.add_subcommand("generate", "write a canonical test variety");
  auto* gen_kind = sub_gen->add_option("kind", gen.kind, "pi_lattice | integers | geometric");
  auto* gen_nmax = sub_gen->add_option("--nmax", gen.nmax, "truncation octave, 0..24");
  auto* gen_ratio = sub_gen->add_option("--ratio", gen.ratio, "geometric ratio (> 1)");
  auto* gen_mult = sub_gen->add_option("--mult", gen.mult, "multiplicity rule: const:K | linear");
  auto* gen_out = sub_gen->add_option("-o,--out", gen.out, "output variety file");
  sub_gen->add_option("--config", gen.config, "key=value config file");

  CheckArgs chk;
  auto* sub_chk = app.add_subcommand("check", "run growth-condition diagnostics");
  auto* chk_variety = sub_chk->add_option("variety", chk.variety, "variety file");
  auto* chk_values = sub_chk->add_option("values", chk.values, "value file (enables condition 3)");
  auto* chk_weight = sub_chk->add_option("--weight", chk.weight, "power:<a> | logpoly | exptype");
  auto* chk_conditions =
      sub_chk->add_option("--conditions", chk.conditions, "comma list from 1,2,3");
  auto* chk_octaves = sub_chk->add_option("--octaves", chk.octaves, "sample range, e.g. 4..12");
  auto* chk_base = sub_chk->add_option("--base", chk.base, "octave base (default 2)");
  auto* chk_bits = sub_chk->add_option("--bits", chk.bits, "table precision in bits");
  auto* chk_report = sub_chk->add_option("--report", chk.report, "JSON report path");
  sub_chk->add_option("--config", chk.config, "key=value config file");

  DivdiffArgs dd;
  auto* sub_dd = app.add_subcommand("divdiff", "write a divided-difference coefficient table");
  auto* dd_variety = sub_dd->add_option("variety", dd.variety, "variety file");
  auto* dd_values = sub_dd->add_option("values", dd.values, "value file");
  auto* dd_q = sub_dd->add_option("--q", dd.q, "number of leading points (default: all)");
  auto* dd_bits = sub_dd->add_option("--bits", dd.bits, "working precision in bits");
  auto* dd_out = sub_dd->add_option("-o,--out", dd.out, "output table file");
  auto* dd_report = sub_dd->add_option("--report", dd.report, "JSON report path");
  sub_dd->add_option("--config", dd.config, "key=value config file");

  FieldArgs fld;
  auto* sub_fld = app.add_subcommand("field", "evaluate F, dbarF or U on a grid (CSV)");
  auto* fld_which = sub_fld->add_option("name", fld.which, "F | dbarF | U");
  auto* fld_variety = sub_fld->add_option("variety", fld.variety, "variety file");
  auto* fld_values = sub_fld->add_option("values", fld.values, "value file (for F and dbarF)");
  auto* fld_grid =
      sub_fld->add_option("--grid", fld.grid, "polar:R:S | polar:rings=..,sectors=..,rmax=.. | "
                                              "cartesian:nx=..,ny=..,extent=..");
  auto* fld_alpha = sub_fld->add_option("--alpha", fld.alpha, "mix factor for U (default 1)");
  auto* fld_bits = sub_fld->add_option("--bits", fld.bits, "working precision in bits");
  auto* fld_out = sub_fld->add_option("-o,--out", fld.out, "output CSV file");
  sub_fld->add_option("--config", fld.config, "key=value config file");

  FitAlphaArgs fa;
  auto* sub_fa = app.add_subcommand("fit-alpha", "search the subharmonicity mix factor");
  auto* fa_variety = sub_fa->add_option("variety", fa.variety, "variety file");
  auto* fa_grid = sub_fa->add_option("--grid", fa.grid, "grid spec (see 'field')");
  auto* fa_tol = sub_fa->add_option("--tol", fa.tol, "Laplacian tolerance (default 1e-6)");
  auto* fa_cap = sub_fa->add_option("--cap", fa.cap, "largest alpha tried (default 2^20)");
  auto* fa_report = sub_fa->add_option("--report", fa.report, "JSON report path");
  sub_fa->add_option("--config", fa.config, "key=value config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sub_gen->parsed()) {
      ConfigLayer cfg;
      if (!gen.config.empty()) cfg.load(gen.config);
      cfg.apply(gen_kind, "kind", gen.kind);
      cfg.apply(gen_nmax, "nmax", gen.nmax);
      cfg.apply(gen_ratio, "ratio", gen.ratio);
      cfg.apply(gen_mult, "mult", gen.mult);
      cfg.apply(gen_out, "out", gen.out);
      return run_generate(gen);
    }
    if (sub_chk->parsed()) {
      ConfigLayer cfg;
      if (!chk.config.empty()) cfg.load(chk.config);
      cfg.apply(chk_variety, "variety", chk.variety);
      cfg.apply(chk_values, "values", chk.values);
      cfg.apply(chk_weight, "weight", chk.weight);
      cfg.apply(chk_conditions, "conditions", chk.conditions);
      cfg.apply(chk_octaves, "octaves", chk.octaves);
      cfg.apply(chk_base, "base", chk.base);
      cfg.apply(chk_bits, "bits", chk.bits);
      cfg.apply(chk_report, "report", chk.report);
      return run_check(chk);
    }
    if (sub_dd->parsed()) {
      ConfigLayer cfg;
      if (!dd.config.empty()) cfg.load(dd.config);
      cfg.apply(dd_variety, "variety", dd.variety);
      cfg.apply(dd_values, "values", dd.values);
      cfg.apply(dd_q, "q", dd.q);
      cfg.apply(dd_bits, "bits", dd.bits);
      cfg.apply(dd_out, "out", dd.out);
      cfg.apply(dd_report, "report", dd.report);
      return run_divdiff(dd);
    }
    if (sub_fld->parsed()) {
      ConfigLayer cfg;
      if (!fld.config.empty()) cfg.load(fld.config);
      cfg.apply(fld_which, "name", fld.which);
      cfg.apply(fld_variety, "variety", fld.variety);
      cfg.apply(fld_values, "values", fld.values);
      cfg.apply(fld_grid, "grid", fld.grid);
      cfg.apply(fld_alpha, "alpha", fld.alpha);
      cfg.apply(fld_bits, "bits", fld.bits);
      cfg.apply(fld_out, "out", fld.out);
      return run_field(fld);
    }
    if (sub_fa->parsed()) {
      ConfigLayer cfg;
      if (!fa.config.empty()) cfg.load(fa.config);
      cfg.apply(fa_variety, "variety", fa.variety);
      cfg.apply(fa_grid, "grid", fa.grid);
      cfg.apply(fa_tol, "tol", fa.tol);
      cfg.apply(fa_cap, "cap", fa.cap);
      cfg.apply(fa_report, "report", fa.report);
      return run_fit_alpha(fa);
    }
  } catch (const varkit::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const varkit::NoAlphaFoundError& e) {
    std::cerr << "error: " << e.what() << " (worst point " << format_double(e.worst_re) << ","
              << format_double(e.worst_im) << " with " << format_double(e.worst_value) << ")\n";
    return 2;
  } catch (const varkit::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const varkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
