#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracosc/solver.hpp"

namespace fracosc::cli {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, int line);
  int line;  // 1-based; 0 when not tied to a line
};

/// key = value problem description. Unset optionals mean "not provided";
/// the remaining fields carry their defaults.
struct Config {
  std::optional<double> omega;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<std::string> f;
  double A = 0.0;
  double B = 0.0;
  int n = 1025;
  double tol = 1e-10;
  int max_iter = 200;
  double damping = 0.5;
  std::vector<double> r_samples;
  std::optional<std::string> output;
};

/// Parses a key=value file ('#' comments, one key per line). Unknown and
/// duplicate keys are rejected with their line number.
Config parse_config_file(const std::string& path);
Config parse_config_text(const std::string& text);

/// The worked example: omega = 1, p = q = 1/2,
/// f = "x - 0.01*(1-t)^0.5", A = 1/100, B = -1/100.
Config example_config();

/// Builds the ProblemSpec; throws ConfigError naming any missing required
/// key (omega, p, q, f).
solver::ProblemSpec to_problem(const Config& c);

}  // namespace fracosc::cli
