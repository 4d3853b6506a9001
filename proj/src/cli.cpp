#include "fraclap/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "fraclap/errors.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/lifting.hpp"
#include "fraclap/oracle.hpp"
#include "fraclap/riesz.hpp"
#include "fraclap/special_fn.hpp"
#include "fraclap/spectral_series.hpp"

namespace fraclap::cli {

namespace fs = std::filesystem;

std::string_view to_string(Command c) {
  switch (c) {
    case Command::constant_rhs: return "constant-rhs";
    case Command::boundary_layer: return "boundary-layer";
    case Command::dirac: return "dirac";
    case Command::selftest: return "selftest";
  }
  return "?";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string_view to_string(BoundaryMode m) {
  return m == BoundaryMode::table1 ? "table1" : "exponent";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

// Short label for file names: 0.25 -> "0.25".
std::string s_tag(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", s);
  return buf;
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Value parsing (locale independent)

std::string trim(std::string_view t) {
  const auto b = t.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = t.find_last_not_of(" \t");
  return std::string(t.substr(b, e - b + 1));
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError("--" + std::string(key) + ": not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

std::int64_t parse_int(std::string_view key, std::string_view text) {
  const double v = parse_double(key, text);
  if (v != std::floor(v) || std::fabs(v) > 9.0e15) {
    throw ConfigError("--" + std::string(key) + ": not an integer: '" + std::string(text) + "'");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(key, text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

JRange parse_range(std::string_view key, std::string_view text) {
  const auto dots = text.find("..");
  JRange r;
  if (dots == std::string_view::npos) {
    r.first = r.last = parse_int(key, text);
  } else {
    r.first = parse_int(key, text.substr(0, dots));
    r.last = parse_int(key, text.substr(dots + 2));
  }
  try {
    r.validate();
  } catch (const DomainError& e) {
    throw ConfigError("--" + std::string(key) + ": " + e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Layered configuration

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "s",  "grid", "trunc", "h",    "j",           "dim",        "out",
      "format", "mode", "accumulation", "log-exponent", "lift-count"};
  return keys;
}

using Layer = std::map<std::string, std::string>;

std::string json_to_text(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return format_double(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw ConfigError("config key '" + key + "': array entries must be numbers");
      if (i) out += key == "j" ? ".." : ",";
      out += format_double(v[i].get<double>());
    }
    return out;
  }
  throw ConfigError("config key '" + key + "': unsupported value type");
}

Layer read_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file " + path.string() + ": top level must be an object");
  Layer layer;
  for (const auto& [raw_key, value] : doc.items()) {
    std::string key = raw_key;
    std::replace(key.begin(), key.end(), '_', '-');
    if (!known_keys().count(key)) throw ConfigError("config file: unknown key '" + raw_key + "'");
    layer[key] = json_to_text(key, value);
  }
  return layer;
}

Layer defaults_for(Command cmd, BoundaryMode mode, int dim) {
  Layer d = {
      {"s", "0.25,0.5,0.75"},
      {"grid", "1025"},
      {"trunc", "10000"},
      {"h", format_double(std::ldexp(1.0, -10))},
      {"j", "1..20"},
      {"dim", "1"},
      {"out", "fraclap_out"},
      {"format", "csv"},
      {"mode", "table1"},
      {"accumulation", "compensated"},
      {"log-exponent", format_double(kTableLogExponent)},
      {"lift-count", std::to_string(kDefaultLiftCount)},
  };
  if (cmd == Command::boundary_layer && mode == BoundaryMode::exponent) {
    d["s"] = "0.5";
    d["h"] = format_double(1e-6);
    d["trunc"] = "1000000";
    d["mode"] = "exponent";
  }
  if (cmd == Command::dirac) {
    d["dim"] = std::to_string(dim);
    if (dim == 1) {
      d["s"] = "0.25,0.45,0.55";
    } else {
      d["s"] = "0.5,0.6,0.75";
      d["grid"] = "101";
      d["trunc"] = "2048";
    }
  }
  if (cmd == Command::selftest) d["s"] = "0.5";
  return d;
}

RunConfig materialize(Command cmd, const Layer& v) {
  RunConfig c;
  c.command = cmd;
  c.s = parse_list("s", v.at("s"));
  for (double s : c.s) {
    if (!(s > 0.0 && s < 1.0)) throw ConfigError("--s: every value must lie in (0,1), got " + format_double(s));
  }
  c.grid = parse_int("grid", v.at("grid"));
  if (c.grid < 2) throw ConfigError("--grid: need at least 2 points");
  const std::string acc = v.at("accumulation");
  Accumulation mode;
  if (acc == "compensated") {
    mode = Accumulation::compensated;
  } else if (acc == "ascending") {
    mode = Accumulation::ascending;
  } else {
    throw ConfigError("--accumulation: expected compensated or ascending, got '" + acc + "'");
  }
  const auto trunc = parse_int("trunc", v.at("trunc"));
  if (trunc < 1) throw ConfigError("--trunc: must be >= 1");
  c.truncation = TruncationPolicy::with(trunc, mode);
  c.output_path = v.at("out");
  if (c.output_path.empty()) throw ConfigError("--out: empty path");
  const std::string fmt = v.at("format");
  if (fmt == "csv") {
    c.format = OutputFormat::csv;
  } else if (fmt == "json") {
    c.format = OutputFormat::json;
  } else {
    throw ConfigError("--format: expected csv or json, got '" + fmt + "'");
  }
  c.h = parse_double("h", v.at("h"));
  if (!(c.h > 0.0)) throw ConfigError("--h: must be positive");
  c.j = parse_range("j", v.at("j"));
  const auto dim = parse_int("dim", v.at("dim"));
  if (dim != 1 && dim != 2) throw ConfigError("--dim: must be 1 or 2");
  c.dim = static_cast<int>(dim);
  const std::string m = v.at("mode");
  if (m == "table1") {
    c.mode = BoundaryMode::table1;
  } else if (m == "exponent") {
    c.mode = BoundaryMode::exponent;
  } else {
    throw ConfigError("mode: expected table1 or exponent, got '" + m + "'");
  }
  c.log_exponent = parse_double("log-exponent", v.at("log-exponent"));
  if (!(c.log_exponent > 0.0)) throw ConfigError("--log-exponent: must be positive");
  c.lift_count = parse_int("lift-count", v.at("lift-count"));
  if (c.lift_count < 1) throw ConfigError("--lift-count: must be >= 1");
  return c;
}

// ---------------------------------------------------------------------------
// Output

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string stem;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;  // extra "key: value" header lines
};

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return format_double(*d);
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string render(const Table& t, const RunConfig& cfg) {
  std::ostringstream os;
  if (cfg.format == OutputFormat::csv) {
    os << "# " << kVersion << '\n';
    for (const auto& line : cfg.describe()) os << "# " << line << '\n';
    for (const auto& line : t.notes) os << "# " << line << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
      os << '\n';
    }
    return os.str();
  }
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  auto& conf = doc["config"];
  conf = nlohmann::ordered_json::object();
  for (const auto& line : cfg.describe()) {
    const auto colon = line.find(": ");
    conf[line.substr(0, colon)] = line.substr(colon + 2);
  }
  doc["notes"] = t.notes;
  doc["columns"] = t.columns;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  return doc.dump(1) + "\n";
}

class Writer {
 public:
  explicit Writer(const RunConfig& cfg) : cfg_(cfg) {
    std::error_code ec;
    fs::create_directories(cfg.output_path, ec);
    if (ec || !fs::is_directory(cfg.output_path)) {
      throw IoError("cannot create output directory " + cfg.output_path.string() +
                    (ec ? ": " + ec.message() : ""));
    }
  }

  void write(const Table& t) {
    const fs::path path =
        cfg_.output_path / (t.stem + (cfg_.format == OutputFormat::csv ? ".csv" : ".json"));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << render(t, cfg_);
    out.close();
    if (!out) throw IoError("write failed for " + path.string());
    written_.push_back(path);
  }

  std::vector<fs::path> take() { return std::move(written_); }

 private:
  const RunConfig& cfg_;
  std::vector<fs::path> written_;
};

// ---------------------------------------------------------------------------
// Commands

void cmd_constant_rhs(const RunConfig& cfg, Writer& w, std::ostream& log) {
  const auto xs = Grid1D(static_cast<std::size_t>(cfg.grid)).nodes();
  for (double sv : cfg.s) {
    const FracPower s(sv);
    const RieszBallSolution riesz(Dim::one, s);
    const auto spectral = ConstantRhsSeries(s, cfg.truncation).evaluate(xs);
    Table t{"constant_rhs_s" + s_tag(sv), {"x", "u_riesz", "u_spectral"}, {}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double ur = riesz(xs[i]);
      if (ur < spectral[i]) {
        throw AccuracyError("u_riesz < u_spectral at x = " + format_double(xs[i]) +
                            " for s = " + format_double(sv));
      }
      t.rows.push_back({xs[i], ur, spectral[i]});
    }
    w.write(t);
    log << "constant-rhs: s = " << s_tag(sv) << " done\n";
  }

  std::vector<FracPower> s_grid;
  for (int i = 1; i <= 99; ++i) s_grid.emplace_back(i / 100.0);
  s_grid.push_back(FracPower::classical());
  Table curve{"constant_rhs_max_values", {"s", "u_riesz_0", "u_spectral_0"}, {}, {}};
  for (const auto& p : max_value_curves(s_grid, cfg.truncation)) {
    curve.rows.push_back({p.s, p.riesz, p.spectral});
  }
  w.write(curve);
}

void cmd_boundary_layer(const RunConfig& cfg, Writer& w, std::ostream& log) {
  if (cfg.mode == BoundaryMode::exponent) {
    const auto est = log_exponent_estimate(cfg.h, cfg.j, cfg.truncation);
    Table t{"boundary_layer_exponent", {"j", "dist", "k"}, {}, {}};
    t.notes.push_back("median_k: " + format_double(est.median()));
    for (std::int64_t j = cfg.j.first; j <= cfg.j.last; ++j) {
      t.rows.push_back({j, static_cast<double>(j) * cfg.h, est.k_values[j - cfg.j.first]});
    }
    w.write(t);
    log << "boundary-layer: median k = " << format_double(est.median()) << '\n';
    return;
  }

  std::vector<FracPower> s_list;
  for (double s : cfg.s) s_list.emplace_back(s);
  const auto rows = boundary_ratio_table(s_list, cfg.h, cfg.j, cfg.truncation, cfg.log_exponent);

  Table table{"boundary_layer_table1", {"s", "formulation", "model", "min", "max"}, {}, {}};
  Table ratios{"boundary_layer_ratios", {"j", "dist"}, {}, {}};
  for (const auto& r : rows) {
    const std::string form = r.model == RatioModel::riesz ? "riesz" : "spectral";
    table.rows.push_back({r.s.value(), form, r.exponent_model, r.min, r.max});
    ratios.columns.push_back(std::string(to_string(r.model)) + "_s" + s_tag(r.s.value()));
  }
  for (std::int64_t j = cfg.j.first; j <= cfg.j.last; ++j) {
    std::vector<Cell> line{j, static_cast<double>(j) * cfg.h};
    for (const auto& r : rows) line.emplace_back(r.ratios[j - cfg.j.first]);
    ratios.rows.push_back(std::move(line));
  }
  w.write(table);
  w.write(ratios);
  log << "boundary-layer: " << rows.size() << " table rows\n";
}

// Riesz fundamental solution with its limit at the origin.
double fundamental_or_limit(const FundamentalSolution& u, double r, Dim n, double s) {
  if (r != 0.0) return u.at_radius(r);
  return 2.0 * s < as_int(n) ? INFINITY : 0.0;
}

void cmd_dirac(const RunConfig& cfg, Writer& w, std::ostream& log) {
  const auto xs = Grid1D(static_cast<std::size_t>(cfg.grid)).nodes();
  if (cfg.dim == 1) {
    std::vector<DiracSolution1D> solutions;
    for (double sv : cfg.s) solutions.emplace_back(FracPower(sv), cfg.truncation);
    for (std::size_t k = 0; k < cfg.s.size(); ++k) {
      const double sv = cfg.s[k];
      const FundamentalSolution u0(Dim::one, FracPower(sv));
      const auto us = solutions[k].evaluate(xs);
      Table t{"dirac1d_s" + s_tag(sv), {"x", "u0_riesz", "u_spectral"}, {}, {}};
      for (std::size_t i = 0; i < xs.size(); ++i) {
        t.rows.push_back({xs[i], fundamental_or_limit(u0, std::fabs(xs[i]), Dim::one, sv), us[i]});
      }
      w.write(t);
      log << "dirac 1d: s = " << s_tag(sv) << " done\n";
    }
    return;
  }

  for (double sv : cfg.s) {
    const FracPower s(sv);
    const auto coeffs = lift_coefficients(s, cfg.lift_count);
    const DiracSolution2D sol(s, cfg.truncation, coeffs);
    const auto w2 = sol.homogeneous_part().evaluate_grid(xs, xs);
    const auto v = harmonic_lift_grid(xs, xs, coeffs);
    const FundamentalSolution u0(Dim::two, s);

    Table field{"dirac2d_s" + s_tag(sv), {"x", "y", "w2", "u_s"}, {}, {}};
    Table diff{"dirac2d_diff_s" + s_tag(sv), {"x", "y", "abs_u0_minus_u_s"}, {}, {}};
    for (std::size_t iy = 0; iy < xs.size(); ++iy) {
      for (std::size_t ix = 0; ix < xs.size(); ++ix) {
        const std::size_t i = iy * xs.size() + ix;
        const double us = w2[i] + sol.lift_scale() * v[i];
        const double r = std::hypot(xs[ix], xs[iy]);
        const double ur = fundamental_or_limit(u0, r, Dim::two, sv);
        field.rows.push_back({xs[ix], xs[iy], w2[i], us});
        diff.rows.push_back({xs[ix], xs[iy], std::fabs(ur - us)});
      }
    }
    w.write(field);
    w.write(diff);
    log << "dirac 2d: s = " << s_tag(sv) << " done\n";
  }
}

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool pass() const { return value <= tolerance; }
};

std::vector<Check> run_selftest(const RunConfig& cfg) {
  using std::numbers::pi;
  std::vector<Check> checks;

  checks.push_back({"riesz_constant_half", std::fabs(riesz_ball_constant(Dim::one, FracPower(0.5)) - 1.0),
                    1e-12});

  {
    const auto xs = Grid1D(257).nodes();
    const auto trunc = TruncationPolicy::with(100000);
    const auto u = ConstantRhsSeries(FracPower(0.999), trunc).evaluate(xs);
    const auto d = DiracSeries1D(FracPower(0.999), trunc).evaluate(xs);
    double eu = 0.0, ed = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      eu = std::max(eu, std::fabs(u[i] - oracle::classical_reference(oracle::ClassicalProblem::constant_rhs_1d, xs[i])));
      ed = std::max(ed, std::fabs(d[i] - oracle::classical_reference(oracle::ClassicalProblem::dirac_1d, xs[i])));
    }
    checks.push_back({"classical_limit_constant_rhs", eu, 5e-3});
    checks.push_back({"classical_limit_dirac", ed, 5e-3});
  }

  {
    const std::size_t n = 4097;
    const Grid1D g(n);
    const FracPower s(cfg.s.front());
    const Field field(g, ConstantRhsSeries(s, cfg.truncation).evaluate(g.nodes()), Formulation::spectral,
                      cfg.truncation, s);
    const oracle::QuadratureRule rule{oracle::QuadratureRule::Kind::trapezoid, static_cast<std::int64_t>(n)};
    const double expected = fourier_coefficients_constant_rhs(s, 1)[0];
    checks.push_back({"coefficient_oracle_e1",
                      std::fabs(oracle::coefficient_oracle(field, 1, rule).value - expected), 1e-6});
  }

  {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> xd(-1.99, 1.99);
    std::uniform_int_distribution<std::int64_t> pd(0, 100), len(1, 200);
    double worst = 0.0;
    for (int done = 0; done < 100;) {
      const double x = xd(rng);
      if (std::fabs(std::sin(pi * x / 2)) <= 1e-3) continue;
      const auto p = pd(rng);
      const auto q = p + len(rng);
      double raw = 0.0;
      for (auto m = p; m < q; ++m) raw += std::cos((2 * m + 1) * pi * x / 2);
      worst = std::max(worst, std::fabs(dirichlet_kernel_sum(p, q, x) - raw) / std::max(1.0, std::fabs(raw)));
      ++done;
    }
    checks.push_back({"dirichlet_kernel_identity", worst, 1e-10});
  }

  {
    const FracPower s(0.6);
    const auto c = lift_coefficients(s, cfg.lift_count);
    const auto f = [&](double x, double y) { return harmonic_lift_2d(x, y, s, c); };
    double worst = 0.0;
    for (double x : {-0.5, 0.0, 0.3}) {
      for (double y : {-0.2, 0.4, 0.7}) {
        worst = std::max(worst, std::fabs(oracle::five_point_laplacian(f, x, y, 1e-3)));
      }
    }
    checks.push_back({"lift_harmonicity", worst, 1e-4});
    double trace = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = -1.0 + i / 50.0;
      trace = std::max(trace, std::fabs(f(t, 1.0) - std::pow(t * t + 1, -0.4)));
    }
    checks.push_back({"lift_boundary_trace", trace, 5e-3});
  }

  {
    const auto xs = Grid1D(257).nodes();
    double worst = 0.0;
    for (double sv : {0.25, 0.5, 0.75}) {
      const RieszBallSolution r(Dim::one, FracPower(sv));
      const auto u = ConstantRhsSeries(FracPower(sv), cfg.truncation).evaluate(xs);
      for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, u[i] - r(xs[i]));
    }
    checks.push_back({"riesz_dominates_spectral", std::max(worst, 0.0), 0.0});
  }
  return checks;
}

void cmd_selftest(const RunConfig& cfg, Writer& w, std::ostream& log) {
  const auto checks = run_selftest(cfg);
  Table t{"selftest", {"check", "value", "tolerance", "pass"}, {}, {}};
  bool all = true;
  for (const auto& c : checks) {
    log << (c.pass() ? "PASS " : "FAIL ") << c.name << " value=" << format_double(c.value)
        << " tol=" << format_double(c.tolerance) << '\n';
    t.rows.push_back({c.name, c.value, c.tolerance, std::string(c.pass() ? "yes" : "no")});
    all = all && c.pass();
  }
  w.write(t);
  if (!all) throw AccuracyError("selftest: oracle disagreement");
}

}  // namespace

std::vector<std::string> RunConfig::describe() const {
  std::vector<std::string> lines;
  lines.push_back("command: " + std::string(to_string(command)));
  lines.push_back("s: " + join_doubles(s));
  lines.push_back("grid: " + std::to_string(grid));
  lines.push_back("trunc: " + std::to_string(truncation.max_index));
  lines.push_back(std::string("accumulation: ") +
                  (truncation.accumulation == Accumulation::compensated ? "compensated" : "ascending"));
  lines.push_back("h: " + format_double(h));
  lines.push_back("j: " + std::to_string(j.first) + ".." + std::to_string(j.last));
  lines.push_back("dim: " + std::to_string(dim));
  lines.push_back("mode: " + std::string(to_string(mode)));
  lines.push_back("log_exponent: " + format_double(log_exponent));
  lines.push_back("lift_count: " + std::to_string(lift_count));
  lines.push_back("format: " + std::string(to_string(format)));
  lines.push_back("out: " + output_path.generic_string());
  return lines;
}

RunConfig resolve_config(const std::vector<std::string>& args) {
  CLI::App app{"Exact solutions of fractional Laplacian Dirichlet problems on (-1,1) and (-1,1)^2",
               "fraclap"};
  // --h is the boundary-layer step, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1, 1);

  Layer flags;
  std::map<std::string, CLI::Option*> opts;
  std::string config_path;
  bool table1 = false, exponent = false;
  std::map<CLI::App*, Command> commands;

  const auto add_common = [&](CLI::App* sub) {
    const std::pair<const char*, const char*> spec[] = {
        {"s", "fractional powers, comma separated"},
        {"grid", "grid points (per axis in 2D)"},
        {"trunc", "series truncation index"},
        {"h", "boundary-layer step"},
        {"j", "boundary-layer index range a..b"},
        {"dim", "dimension for dirac: 1 or 2"},
        {"out", "output directory"},
        {"format", "csv or json"},
        {"accumulation", "compensated or ascending"},
        {"log-exponent", "exponent of |ln dist| in the s = 1/2 table row"},
        {"lift-count", "number of odd sine modes in the 2D harmonic lift"},
    };
    for (const auto& [name, help] : spec) {
      opts[std::string(sub->get_name()) + "/" + name] =
          sub->add_option(std::string("--") + name, flags[std::string(sub->get_name()) + "/" + name], help);
    }
    sub->add_option("--config", config_path, "JSON file with default values for any flag");
  };

  auto* c1 = app.add_subcommand("constant-rhs", "profiles for f = 1 and the u(0)-vs-s curve");
  auto* c2 = app.add_subcommand("boundary-layer", "boundary ratio table or log-exponent estimate");
  auto* c3 = app.add_subcommand("dirac", "Dirac right-hand side in 1D or 2D");
  auto* c4 = app.add_subcommand("selftest", "oracle cross-checks");
  commands = {{c1, Command::constant_rhs}, {c2, Command::boundary_layer}, {c3, Command::dirac},
              {c4, Command::selftest}};
  for (auto* sub : {c1, c2, c3, c4}) add_common(sub);
  auto* t1 = c2->add_flag("--table1", table1, "ratio table (default)");
  auto* ex = c2->add_flag("--exponent", exponent, "estimate the |ln dist| exponent at s = 1/2");
  t1->excludes(ex);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    if (app.exit(e, out, err) == 0) throw HelpRequest(out.str());
    throw ConfigError(trim(err.str()));
  }

  CLI::App* sub = app.get_subcommands().front();
  const Command cmd = commands.at(sub);
  const std::string prefix = std::string(sub->get_name()) + "/";

  Layer chosen;
  for (const auto& key : known_keys()) {
    const auto it = opts.find(prefix + key);
    if (it != opts.end() && it->second->count() > 0) chosen[key] = flags[prefix + key];
  }
  if (table1) chosen["mode"] = "table1";
  if (exponent) chosen["mode"] = "exponent";

  Layer file;
  if (!config_path.empty()) file = read_config_file(config_path);

  const auto pick = [&](const std::string& key, const std::string& fallback) {
    if (auto it = chosen.find(key); it != chosen.end()) return it->second;
    if (auto it = file.find(key); it != file.end()) return it->second;
    return fallback;
  };
  const std::string mode_text = pick("mode", "table1");
  const BoundaryMode mode = mode_text == "exponent" ? BoundaryMode::exponent : BoundaryMode::table1;
  const std::string dim_text = pick("dim", "1");
  const int dim = dim_text == "2" ? 2 : 1;

  Layer resolved = defaults_for(cmd, mode, dim);
  for (auto& [key, value] : resolved) value = pick(key, value);
  return materialize(cmd, resolved);
}

std::vector<fs::path> execute(const RunConfig& cfg, std::ostream& log) {
  Writer w(cfg);
  switch (cfg.command) {
    case Command::constant_rhs: cmd_constant_rhs(cfg, w, log); break;
    case Command::boundary_layer: cmd_boundary_layer(cfg, w, log); break;
    case Command::dirac: cmd_dirac(cfg, w, log); break;
    case Command::selftest: cmd_selftest(cfg, w, log); break;
  }
  return w.take();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = resolve_config(args);
  } catch (const HelpRequest& e) {
    out << e.what();
    return ExitCode::ok;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::invalid_config;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::io_failure;
  }

  out << "# " << kVersion << '\n';
  for (const auto& line : cfg.describe()) out << "# " << line << '\n';
  try {
    for (const auto& path : execute(cfg, out)) out << "wrote " << path.generic_string() << '\n';
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::io_failure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::io_failure;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::accuracy_failure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::invalid_config;
  }
  return ExitCode::ok;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace fraclap::cli
