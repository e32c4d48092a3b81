#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "varkit/errors.hpp"
#include "varkit/io.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"

using varkit::BigComplex;
using varkit::MultiplicityVariety;
using varkit::ValueSequence;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& name)
      : path_((std::filesystem::temp_directory_path() / name).string()) {}
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }
  void write(const std::string& text) const {
    std::ofstream out(path_);
    out << text;
  }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("variety files parse points, comments and the nmax directive") {
  TempFile f("vk_var1.txt");
  f.write(
      "# sample variety\n"
      "# nmax 5\n"
      "\n"
      "0 0 2\n"
      "1.5 -2 1   # trailing comment\n"
      "3.141592653589793 0 3\n");
  varkit::VarietyLoadInfo info;
  const auto V = varkit::load_variety(f.path(), varkit::kStoragePrecision, &info);
  REQUIRE(V.size() == 3);
  CHECK(V.n_max() == 5);
  CHECK(info.explicit_n_max);
  CHECK(info.was_sorted);
  CHECK(V.origin_present());
  CHECK(V.point(0).mult == 2);
  CHECK(V.point(1).zd == std::complex<double>(1.5, -2.0));
  CHECK(V.point(2).mult == 3);
}

TEST_CASE("missing nmax means the file lists the whole variety") {
  TempFile f("vk_var2.txt");
  f.write("1 0 1\n5 0 1\n");
  varkit::VarietyLoadInfo info;
  const auto V = varkit::load_variety(f.path(), varkit::kStoragePrecision, &info);
  CHECK_FALSE(info.explicit_n_max);
  CHECK(V.complete());

  TempFile g("vk_var3.txt");
  g.write("# nmax 2\n4 0 1\n");
  const auto G = varkit::load_variety(g.path(), varkit::kStoragePrecision);
  CHECK_FALSE(G.complete());
  CHECK(G.n_max() == 2);
}

TEST_CASE("variety parse errors carry the file location") {
  TempFile f("vk_var5.txt");

  f.write("1 0\n");
  CHECK_THROWS_WITH_AS(varkit::load_variety(f.path()),
                       doctest::Contains(":1: expected 're im mult'"), varkit::ParseError);

  f.write("1 0 1\nx 0 1\n");
  CHECK_THROWS_WITH_AS(varkit::load_variety(f.path()), doctest::Contains(":2:"),
                       varkit::ParseError);

  f.write("1 0 0\n");
  CHECK_THROWS_AS(varkit::load_variety(f.path()), varkit::ParseError);

  f.write("# nmax 5\n# nmax 6\n1 0 1\n");
  CHECK_THROWS_WITH_AS(varkit::load_variety(f.path()), doctest::Contains("duplicate nmax"),
                       varkit::ParseError);

  f.write("# nmax 99\n1 0 1\n");
  CHECK_THROWS_AS(varkit::load_variety(f.path()), varkit::ParseError);

  f.write("1 0 1\n1 0 2\n");
  CHECK_THROWS_AS(varkit::load_variety(f.path()), varkit::DuplicateNodeError);

  CHECK_THROWS_AS(varkit::load_variety("/nonexistent/vk.txt"), varkit::ParseError);
}

TEST_CASE("variety save/load round-trips exactly") {
  const auto V = MultiplicityVariety::from_doubles(
      {{{0.0, 0.0}, 2}, {{0.1, -0.7}, 1}, {{3.25, 4.5}, 3}}, 4);
  TempFile f("vk_var6.txt");
  varkit::save_variety(f.path(), V);
  varkit::VarietyLoadInfo info;
  const auto R = varkit::load_variety(f.path(), varkit::kStoragePrecision, &info);
  CHECK(info.explicit_n_max);
  CHECK(info.was_sorted);
  REQUIRE(R.size() == V.size());
  CHECK(R.n_max() == 4);
  for (int j = 0; j < V.size(); ++j) {
    CHECK(R.point(j).z == V.point(j).z);
    CHECK(R.point(j).mult == V.point(j).mult);
  }

  // Complete varieties stay complete.
  const auto C = MultiplicityVariety::from_doubles({{{1.0, 0.0}, 1}},
                                                   MultiplicityVariety::kComplete);
  TempFile g("vk_var7.txt");
  varkit::save_variety(g.path(), C);
  CHECK(varkit::load_variety(g.path()).complete());
}

TEST_CASE("value files round-trip and enforce full slot coverage") {
  const auto V = MultiplicityVariety::from_doubles({{{0.0, 0.0}, 2}, {{2.0, 1.0}, 1}},
                                                   MultiplicityVariety::kComplete);
  ValueSequence W(V, varkit::kStoragePrecision);
  W.set(0, 0, BigComplex(1.25, -3.5, varkit::kStoragePrecision));
  W.set(0, 1, BigComplex(0.1, 0.0, varkit::kStoragePrecision));
  W.set(1, 0, BigComplex(-7.0, 2.0, varkit::kStoragePrecision));
  TempFile f("vk_val1.txt");
  varkit::save_values(f.path(), V, W);
  const auto R = varkit::load_values(f.path(), V, varkit::kStoragePrecision);
  for (int j = 0; j < V.size(); ++j) {
    for (int l = 0; l < V.point(j).mult; ++l) {
      CHECK(R.at(j, l) == W.at(j, l));
    }
  }

  TempFile g("vk_val2.txt");
  g.write("1 0 1.25 -3.5\n2 0 -7 2\n");  // slot (1,1) missing
  CHECK_THROWS_WITH_AS(varkit::load_values(g.path(), V), doctest::Contains("misses slot"),
                       varkit::ValidationError);

  g.write("1 0 1 0\n1 0 2 0\n1 1 0 0\n2 0 0 0\n");
  CHECK_THROWS_WITH_AS(varkit::load_values(g.path(), V), doctest::Contains("slot assigned twice"),
                       varkit::ParseError);

  g.write("3 0 1 0\n");
  CHECK_THROWS_AS(varkit::load_values(g.path(), V), varkit::ParseError);

  g.write("1 2 1 0\n");
  CHECK_THROWS_AS(varkit::load_values(g.path(), V), varkit::ParseError);

  g.write("1 0 1\n");
  CHECK_THROWS_AS(varkit::load_values(g.path(), V), varkit::ParseError);
}

TEST_CASE("coefficient tables are saved with their shape headers") {
  const auto V = MultiplicityVariety::from_doubles({{{0.0, 0.0}, 2}, {{1.0, 0.0}, 1}},
                                                   MultiplicityVariety::kComplete);
  const auto W = ValueSequence::delta_first_top(V, varkit::kDefaultPrecision);
  const auto T = varkit::phi_table(V, W, 2, varkit::kDefaultPrecision);
  TempFile f("vk_tab1.txt");
  varkit::save_table(f.path(), V, T);

  std::ifstream in(f.path());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("# varkit table") != std::string::npos);
  CHECK(text.find("# precision_bits 128") != std::string::npos);
  CHECK(text.find("# points 2") != std::string::npos);
  CHECK(text.find("1 1 1") != std::string::npos);   // phi(0,1) = 1, written 1-based
  CHECK(text.find("2 0 -1") != std::string::npos);  // phi(1,0) = -1
}

TEST_CASE("config files parse key=value with comments") {
  TempFile f("vk_cfg1.txt");
  f.write(
      "# run configuration\n"
      "weight = power:2\n"
      "octaves=0:8   # inline comment\n"
      "\n"
      "bits = 192\n");
  const auto cfg = varkit::load_config(f.path());
  REQUIRE(cfg.size() == 3);
  CHECK(cfg.at("weight") == "power:2");
  CHECK(cfg.at("octaves") == "0:8");
  CHECK(cfg.at("bits") == "192");

  f.write("weight power:2\n");
  CHECK_THROWS_WITH_AS(varkit::load_config(f.path()), doctest::Contains("key=value"),
                       varkit::ParseError);

  f.write("a=1\na=2\n");
  CHECK_THROWS_WITH_AS(varkit::load_config(f.path()), doctest::Contains("duplicate key"),
                       varkit::ParseError);

  f.write("=3\n");
  CHECK_THROWS_AS(varkit::load_config(f.path()), varkit::ParseError);
}

TEST_CASE("format_double emits shortest round-trip decimal") {
  CHECK(varkit::format_double(0.1) == "0.1");
  CHECK(varkit::format_double(1.0) == "1");
  CHECK(varkit::format_double(-2.5) == "-2.5");
  CHECK(varkit::format_double(1e300) == "1e+300");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(varkit::format_double(third)) == third);
}
