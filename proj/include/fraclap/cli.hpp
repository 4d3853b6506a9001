#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fraclap/asymptotics.hpp"
#include "fraclap/summation.hpp"

namespace fraclap::cli {

inline constexpr std::string_view kVersion = "fraclap 1.0.0";

enum ExitCode : int { ok = 0, invalid_config = 2, accuracy_failure = 3, io_failure = 4 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help or --version was given; what() holds the text to print.
class HelpRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { constant_rhs, boundary_layer, dirac, selftest };
enum class OutputFormat { csv, json };
enum class BoundaryMode { table1, exponent };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);
std::string_view to_string(BoundaryMode m);

/// Fully resolved run parameters. Every field holds a concrete value after
/// resolve_config; the same struct is echoed into each output header.
struct RunConfig {
  Command command = Command::selftest;
  std::vector<double> s;
  std::int64_t grid = 0;
  TruncationPolicy truncation;
  std::filesystem::path output_path;
  OutputFormat format = OutputFormat::csv;
  double h = 0.0;
  JRange j;
  int dim = 1;
  BoundaryMode mode = BoundaryMode::table1;
  double log_exponent = kTableLogExponent;
  std::int64_t lift_count = 0;

  /// "key: value" lines in a fixed order.
  std::vector<std::string> describe() const;
};

/// Parses argv (argv[0] is skipped) and layers flags over the optional
/// --config JSON file over the built-in defaults. Throws ConfigError, IoError (unreadable
/// config file) or HelpRequest.
RunConfig resolve_config(const std::vector<std::string>& args);

/// Runs one command and returns the files written, in write order.
std::vector<std::filesystem::path> execute(const RunConfig& config, std::ostream& log);

/// Full entry point: parse, print the resolved config, execute, map errors
/// to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// 17 significant digits ("%.17g"), or inf/-inf/nan.
std::string format_double(double x);

}  // namespace fraclap::cli
