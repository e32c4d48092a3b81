#include "varkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "varkit/errors.hpp"

namespace varkit {

namespace {

[[noreturn]] void fail_at(const std::string& path, int line, const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

long parse_long(const std::string& path, int line, const std::string& tok,
                const std::string& what) {
  long v = 0;
  const auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (r.ec != std::errc() || r.ptr != tok.data() + tok.size()) {
    fail_at(path, line, "expected an integer " + what + ", got '" + tok + "'");
  }
  return v;
}

BigFloat parse_number(const std::string& path, int line, const std::string& tok,
                      mpfr_prec_t prec) {
  try {
    return BigFloat::parse(tok, prec);
  } catch (const ParseError& e) {
    fail_at(path, line, e.what());
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

MultiplicityVariety load_variety(const std::string& path, mpfr_prec_t precision_bits,
                                 VarietyLoadInfo* info) {
  auto in = open_input(path);
  std::vector<std::pair<BigComplex, int>> points;
  int n_max = MultiplicityVariety::kComplete;
  bool have_n_max = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body[0] == '#') {
      const auto fields = split_fields(body.substr(1));
      if (!fields.empty() && fields[0] == "nmax") {
        if (fields.size() != 2) fail_at(path, lineno, "nmax directive needs one integer");
        if (have_n_max) fail_at(path, lineno, "duplicate nmax directive");
        const long v = parse_long(path, lineno, fields[1], "octave");
        if (v < 0 || v > 62) fail_at(path, lineno, "nmax out of range [0, 62]");
        n_max = static_cast<int>(v);
        have_n_max = true;
      }
      continue;
    }
    const auto hash = body.find('#');
    if (hash != std::string::npos) body = trim(body.substr(0, hash));
    const auto fields = split_fields(body);
    if (fields.size() != 3) {
      fail_at(path, lineno, "expected 're im mult', got " + std::to_string(fields.size()) +
                                " fields");
    }
    BigComplex z(precision_bits);
    z.re() = parse_number(path, lineno, fields[0], precision_bits);
    z.im() = parse_number(path, lineno, fields[1], precision_bits);
    const long mult = parse_long(path, lineno, fields[2], "multiplicity");
    if (mult < 1) fail_at(path, lineno, "multiplicity must be at least 1");
    if (!z.is_finite()) fail_at(path, lineno, "node must be finite");
    points.emplace_back(std::move(z), static_cast<int>(mult));
  }

  MultiplicityVariety V(std::move(points), n_max);
  if (info) {
    info->was_sorted = V.input_was_sorted();
    info->explicit_n_max = have_n_max;
  }
  return V;
}

void save_variety(const std::string& path, const MultiplicityVariety& V) {
  auto out = open_output(path);
  out << "# varkit variety\n";
  if (!V.complete()) out << "# nmax " << V.n_max() << "\n";
  for (int j = 0; j < V.size(); ++j) {
    const auto& p = V.point(j);
    out << p.z.re().to_string() << ' ' << p.z.im().to_string() << ' ' << p.mult << '\n';
  }
  if (!out) throw Error("failed writing '" + path + "'");
}

ValueSequence load_values(const std::string& path, const MultiplicityVariety& V,
                          mpfr_prec_t precision_bits) {
  auto in = open_input(path);
  ValueSequence W(V, precision_bits);
  std::vector<char> seen(static_cast<size_t>(V.total_mult(V.size())), 0);

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto hash = body.find('#');
    if (hash != std::string::npos) body = trim(body.substr(0, hash));
    const auto fields = split_fields(body);
    if (fields.size() != 4) {
      fail_at(path, lineno, "expected 'j l re im', got " + std::to_string(fields.size()) +
                                " fields");
    }
    const long j = parse_long(path, lineno, fields[0], "point index");
    const long l = parse_long(path, lineno, fields[1], "derivative slot");
    if (j < 1 || j > V.size()) {
      fail_at(path, lineno, "point index " + std::to_string(j) + " outside 1.." +
                                std::to_string(V.size()));
    }
    const int m = V.point(static_cast<int>(j - 1)).mult;
    if (l < 0 || l >= m) {
      fail_at(path, lineno, "derivative slot " + std::to_string(l) + " outside 0.." +
                                std::to_string(m - 1));
    }
    const auto slot = static_cast<size_t>(V.slot_index(static_cast<int>(j - 1),
                                                       static_cast<int>(l)));
    if (seen[slot]) fail_at(path, lineno, "slot assigned twice");
    seen[slot] = 1;
    BigComplex v(precision_bits);
    v.re() = parse_number(path, lineno, fields[2], precision_bits);
    v.im() = parse_number(path, lineno, fields[3], precision_bits);
    W.set(static_cast<int>(j - 1), static_cast<int>(l), v);
  }

  for (int j = 0; j < V.size(); ++j) {
    for (int l = 0; l < V.point(j).mult; ++l) {
      if (!seen[static_cast<size_t>(V.slot_index(j, l))]) {
        throw ValidationError("value file '" + path + "' misses slot (j=" +
                              std::to_string(j + 1) + ", l=" + std::to_string(l) + ")");
      }
    }
  }
  return W;
}

void save_values(const std::string& path, const MultiplicityVariety& V,
                 const ValueSequence& W) {
  auto out = open_output(path);
  out << "# varkit values\n";
  for (int j = 0; j < V.size(); ++j) {
    for (int l = 0; l < V.point(j).mult; ++l) {
      const auto& v = W.at(j, l);
      out << (j + 1) << ' ' << l << ' ' << v.re().to_string() << ' ' << v.im().to_string()
          << '\n';
    }
  }
  if (!out) throw Error("failed writing '" + path + "'");
}

void save_table(const std::string& path, const MultiplicityVariety& V,
                const DividedDifferenceTable& T) {
  auto out = open_output(path);
  out << "# varkit table\n";
  out << "# precision_bits " << T.precision_bits << "\n";
  out << "# points " << T.points() << "\n";
  for (int j = 0; j < T.points(); ++j) {
    for (int l = 0; l < V.point(j).mult; ++l) {
      const auto& v = T.at(j, l);
      out << (j + 1) << ' ' << l << ' ' << v.re().to_string() << ' ' << v.im().to_string()
          << '\n';
    }
  }
  if (!out) throw Error("failed writing '" + path + "'");
}

std::map<std::string, std::string> load_config(const std::string& path) {
  auto in = open_input(path);
  std::map<std::string, std::string> cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line;
    const auto hash = body.find('#');
    if (hash != std::string::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail_at(path, lineno, "expected 'key=value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) fail_at(path, lineno, "empty key");
    if (!cfg.emplace(key, value).second) fail_at(path, lineno, "duplicate key '" + key + "'");
  }
  return cfg;
}

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace varkit
