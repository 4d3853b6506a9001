#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "fraclap/cli.hpp"
#include "json.hpp"

using namespace fraclap::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("fraclap_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-comment lines of a CSV file, split on commas.
std::vector<std::vector<std::string>> csv_rows(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("format_double") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(INFINITY) == "inf");
  CHECK(format_double(-INFINITY) == "-inf");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("resolve_config: defaults per command") {
  const auto bl = resolve_config({"boundary-layer", "--table1"});
  CHECK(bl.mode == BoundaryMode::table1);
  CHECK(bl.h == std::ldexp(1.0, -10));
  CHECK(bl.truncation.max_index == 10000);
  CHECK(bl.s == std::vector<double>{0.25, 0.5, 0.75});

  const auto ex = resolve_config({"boundary-layer", "--exponent"});
  CHECK(ex.mode == BoundaryMode::exponent);
  CHECK(ex.h == 1e-6);
  CHECK(ex.truncation.max_index == 1000000);

  const auto d2 = resolve_config({"dirac", "--dim", "2"});
  CHECK(d2.grid == 101);
  CHECK(d2.truncation.max_index == 2048);
  CHECK(d2.s == std::vector<double>{0.5, 0.6, 0.75});

  const auto d1 = resolve_config({"dirac"});
  CHECK(d1.dim == 1);
  CHECK(d1.s == std::vector<double>{0.25, 0.45, 0.55});

  const auto c = resolve_config({"constant-rhs", "--j", "3..7", "--trunc", "1e5"});
  CHECK(c.j.first == 3);
  CHECK(c.j.last == 7);
  CHECK(c.truncation.max_index == 100000);
  CHECK(resolve_config({"constant-rhs", "--j", "4"}).j.size() == 1);
}

TEST_CASE("resolve_config: flags override the config file, which overrides defaults") {
  TempDir tmp;
  const auto cfg_path = tmp.path / "cfg.json";
  std::ofstream(cfg_path) << R"({"s": [0.3, 0.4], "grid": 65, "format": "json", "j": [2, 5],
                                 "log_exponent": 0.85})";
  const auto c = resolve_config({"boundary-layer", "--config", cfg_path.string(), "--grid", "33"});
  CHECK(c.grid == 33);
  CHECK(c.s == std::vector<double>{0.3, 0.4});
  CHECK(c.format == OutputFormat::json);
  CHECK(c.j.first == 2);
  CHECK(c.j.last == 5);
  CHECK(c.log_exponent == 0.85);
  CHECK(c.truncation.max_index == 10000);

  std::ofstream(tmp.path / "bad.json") << R"({"colour": 1})";
  CHECK_THROWS_AS(resolve_config({"dirac", "--config", (tmp.path / "bad.json").string()}), ConfigError);
  std::ofstream(tmp.path / "broken.json") << "{";
  CHECK_THROWS_AS(resolve_config({"dirac", "--config", (tmp.path / "broken.json").string()}),
                  ConfigError);
  CHECK_THROWS_AS(resolve_config({"dirac", "--config", (tmp.path / "missing.json").string()}),
                  IoError);
}

TEST_CASE("resolve_config: invalid values") {
  CHECK_THROWS_AS(resolve_config({"dirac", "--dim", "3"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"dirac", "--s", "0.5,1.2"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"dirac", "--s", "abc"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"constant-rhs", "--grid", "1"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"constant-rhs", "--trunc", "2.5"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"constant-rhs", "--format", "xml"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"constant-rhs", "--j", "5..2"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"boundary-layer", "--table1", "--exponent"}), ConfigError);
  CHECK_THROWS_AS(resolve_config({}), ConfigError);
  CHECK_THROWS_AS(resolve_config({"--help"}), HelpRequest);
}

TEST_CASE("run: exit codes") {
  TempDir tmp;
  const std::string out = (tmp.path / "o").string();
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"--version"}).out.find("fraclap") != std::string::npos);
  CHECK(invoke({"dirac", "--s", "7", "--out", out}).code == 2);

  const auto half = invoke({"dirac", "--dim", "1", "--s", "0.5", "--out", out});
  CHECK(half.code == 2);
  CHECK(half.err.find("s = 1/2") != std::string::npos);

  std::ofstream(tmp.path / "file") << "x";
  const auto io = invoke({"boundary-layer", "--out", (tmp.path / "file" / "sub").string()});
  CHECK(io.code == 4);
  CHECK(io.err.find((tmp.path / "file").string()) != std::string::npos);

  // The exponent model needs |ln(j h)| > 1.
  CHECK(invoke({"boundary-layer", "--exponent", "--h", "0.05", "--out", out}).code == 2);
}

TEST_CASE("boundary-layer: table layout, single row, json, determinism") {
  TempDir tmp;
  const auto dir = tmp.path / "bl";
  REQUIRE(invoke({"boundary-layer", "--table1", "--out", dir.string()}).code == 0);
  const auto table = csv_rows(dir / "boundary_layer_table1.csv");
  CHECK(table.size() == 8);
  CHECK(table[0] == std::vector<std::string>{"s", "formulation", "model", "min", "max"});
  const auto text = slurp(dir / "boundary_layer_table1.csv");
  CHECK(text.find("# trunc: 10000") != std::string::npos);
  CHECK(text.find("# fraclap 1.0.0") == 0);

  const auto first = slurp(dir / "boundary_layer_ratios.csv");
  REQUIRE(invoke({"boundary-layer", "--table1", "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "boundary_layer_ratios.csv") == first);

  const auto one = tmp.path / "one";
  REQUIRE(invoke({"boundary-layer", "--j", "1..1", "--out", one.string()}).code == 0);
  CHECK(csv_rows(one / "boundary_layer_ratios.csv").size() == 2);

  const auto js = tmp.path / "js";
  REQUIRE(invoke({"boundary-layer", "--format", "json", "--out", js.string()}).code == 0);
  const auto doc = nlohmann::json::parse(slurp(js / "boundary_layer_table1.json"));
  CHECK(doc["rows"].size() == 7);
  CHECK(doc["config"]["trunc"] == "10000");
  CHECK(doc["columns"][3] == "min");

  const auto ex = tmp.path / "ex";
  REQUIRE(invoke({"boundary-layer", "--exponent", "--h", "1e-5", "--trunc", "100000", "--j",
                  "1..5", "--out", ex.string()})
              .code == 0);
  const auto k = csv_rows(ex / "boundary_layer_exponent.csv");
  REQUIRE(k.size() == 6);
  for (std::size_t i = 1; i < k.size(); ++i) {
    CHECK(std::stod(k[i][2]) > 0.8);
    CHECK(std::stod(k[i][2]) < 0.9);
  }
}

TEST_CASE("constant-rhs: boundary zeros and riesz above spectral in the file") {
  TempDir tmp;
  REQUIRE(invoke({"constant-rhs", "--grid", "129", "--out", tmp.path.string()}).code == 0);
  for (const char* tag : {"0.25", "0.5", "0.75"}) {
    const auto rows = csv_rows(tmp.path / (std::string("constant_rhs_s") + tag + ".csv"));
    REQUIRE(rows.size() == 130);
    CHECK(rows[1] == std::vector<std::string>{"-1", "0", "0"});
    CHECK(rows.back() == std::vector<std::string>{"1", "0", "0"});
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) >= std::stod(rows[i][2]));
  }
  const auto curve = csv_rows(tmp.path / "constant_rhs_max_values.csv");
  CHECK(curve.size() == 101);
  CHECK(curve.back()[0] == "1");
}

TEST_CASE("dirac: 1D origin limits and 2D transpose symmetry") {
  TempDir tmp;
  REQUIRE(invoke({"dirac", "--grid", "21", "--out", tmp.path.string()}).code == 0);
  const auto r25 = csv_rows(tmp.path / "dirac1d_s0.25.csv");
  CHECK(r25[11][1] == "inf");
  const auto r55 = csv_rows(tmp.path / "dirac1d_s0.55.csv");
  CHECK(r55[11][1] == "0");
  CHECK(std::stod(r55[1][1]) == std::stod(r55[1][2]));  // boundary values agree

  REQUIRE(invoke({"dirac", "--dim", "2", "--grid", "21", "--trunc", "64", "--lift-count", "100",
                  "--s", "0.6", "--out", tmp.path.string()})
              .code == 0);
  const auto field = csv_rows(tmp.path / "dirac2d_s0.6.csv");
  const auto diff = csv_rows(tmp.path / "dirac2d_diff_s0.6.csv");
  REQUIRE(field.size() == 21 * 21 + 1);
  REQUIRE(diff.size() == field.size());
  CHECK(diff[0].back() == "abs_u0_minus_u_s");
  for (std::size_t iy = 0; iy < 21; ++iy) {
    for (std::size_t ix = 0; ix < 21; ++ix) {
      const auto& a = field[1 + iy * 21 + ix];
      const auto& b = field[1 + ix * 21 + iy];
      CHECK(std::stod(a[2]) == doctest::Approx(std::stod(b[2])).epsilon(1e-12));
      CHECK(std::stod(a[3]) == doctest::Approx(std::stod(b[3])).epsilon(1e-12));
    }
  }
  CHECK(diff[1 + 10 * 21 + 10][2] == "inf");
}

TEST_CASE("selftest passes") {
  TempDir tmp;
  const auto r = invoke({"selftest", "--out", tmp.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
