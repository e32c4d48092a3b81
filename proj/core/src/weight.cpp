#include "varkit/weight.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "varkit/errors.hpp"

namespace varkit {

namespace {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

Weight Weight::power(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("weight power exponent must be a positive finite real");
  }
  return Weight(WeightKind::Power, alpha);
}

Weight Weight::log_poly() { return Weight(WeightKind::LogPoly, 0.0); }

Weight Weight::exp_type() { return Weight(WeightKind::ExpType, 1.0); }

Weight Weight::parse(const std::string& spelling) {
  if (spelling == "logpoly") return log_poly();
  if (spelling == "exptype") return exp_type();
  const std::string prefix = "power:";
  if (spelling.rfind(prefix, 0) == 0) {
    const std::string arg = spelling.substr(prefix.size());
    if (arg.empty()) throw ParseError("missing exponent in weight '" + spelling + "'");
    char* end = nullptr;
    const double alpha = std::strtod(arg.c_str(), &end);
    if (end == nullptr || *end != '\0') {
      throw ParseError("malformed exponent in weight '" + spelling + "'");
    }
    return power(alpha);
  }
  throw ParseError("unknown weight '" + spelling +
                   "' (expected power:<alpha>, logpoly or exptype)");
}

std::string Weight::spelling() const {
  switch (kind_) {
    case WeightKind::Power:
      return "power:" + format_double(alpha_);
    case WeightKind::LogPoly:
      return "logpoly";
    case WeightKind::ExpType:
      return "exptype";
  }
  return "unknown";
}

double Weight::eval_radius(double r) const {
  if (!(r >= 0.0)) throw ValidationError("weight evaluated at a negative or NaN radius");
  switch (kind_) {
    case WeightKind::Power:
      return std::pow(r, alpha_);
    case WeightKind::LogPoly:
      return std::log1p(r * r);
    case WeightKind::ExpType:
      return r;
  }
  return 0.0;
}

double Weight::eval_octave(int n) const { return eval_radius(std::ldexp(1.0, n)); }

double Weight::doubling_constant() const {
  double sup = 0.0;
  for (int k = -16; k <= 24; ++k) {
    const double r = std::ldexp(1.0, k);
    const double p = eval_radius(r);
    if (p <= 0.0) continue;
    sup = std::max(sup, eval_radius(2.0 * r) / p);
  }
  return sup;
}

AxiomReport Weight::verify_axioms(double cap_log_bound, double cap_doubling) const {
  AxiomReport report;
  report.cap_log_bound = cap_log_bound;
  report.cap_doubling = cap_doubling;
  for (int k = -16; k <= 24; ++k) {
    // Dyadic radii plus an off-dyadic companion, to keep the grid from
    // conspiring with dyadic structure in the weight itself.
    for (double r : {std::ldexp(1.0, k), std::ldexp(1.5, k)}) {
      const double p = eval_radius(r);
      if (p <= 0.0) {
        report.zero_p_radii.push_back(r);
        continue;
      }
      const double log_ratio = std::log1p(r * r) / p;
      const double dbl_ratio = eval_radius(2.0 * r) / p;
      report.log_bound_ratios.push_back({r, log_ratio});
      report.doubling_ratios.push_back({r, dbl_ratio});
      report.sup_log_bound = std::max(report.sup_log_bound, log_ratio);
      report.sup_doubling = std::max(report.sup_doubling, dbl_ratio);
    }
  }
  report.pass_log_bound = report.sup_log_bound <= cap_log_bound;
  report.pass_doubling = report.sup_doubling <= cap_doubling;
  return report;
}

}  // namespace varkit
