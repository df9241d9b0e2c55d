#include "fracosc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fracosc/textio.hpp"

namespace fracosc::cli {

ConfigError::ConfigError(const std::string& msg, int line)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + msg
                                  : "config: " + msg),
      line(line) {}

Config parse_config_text(const std::string& text) {
  Config c;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = textio::trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected key = value, got '" + line + "'", lineno);
    }
    const std::string key = textio::trim(line.substr(0, eq));
    const std::string value = textio::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", lineno);
    if (!seen.insert(key).second) {
      throw ConfigError("duplicate key '" + key + "'", lineno);
    }
    try {
      if (key == "omega") c.omega = textio::parse_double(value);
      else if (key == "p") c.p = textio::parse_double(value);
      else if (key == "q") c.q = textio::parse_double(value);
      else if (key == "f") c.f = value;
      else if (key == "A") c.A = textio::parse_double(value);
      else if (key == "B") c.B = textio::parse_double(value);
      else if (key == "n") c.n = textio::parse_int(value);
      else if (key == "tol") c.tol = textio::parse_double(value);
      else if (key == "max_iter") c.max_iter = textio::parse_int(value);
      else if (key == "damping") c.damping = textio::parse_double(value);
      else if (key == "r_samples") c.r_samples = textio::parse_double_list(value);
      else if (key == "output") c.output = value;
      else throw ConfigError("unknown key '" + key + "'", lineno);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what(), lineno);
    }
  }
  return c;
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Config example_config() {
  Config c;
  c.omega = 1.0;
  c.p = 0.5;
  c.q = 0.5;
  c.f = "x - 0.01*(1-t)^0.5";
  c.A = 0.01;
  c.B = -0.01;
  return c;
}

solver::ProblemSpec to_problem(const Config& c) {
  const auto require = [](const auto& opt, const char* key) -> const auto& {
    if (!opt) throw ConfigError(std::string("missing required key '") + key + "'", 0);
    return *opt;
  };
  const double omega = require(c.omega, "omega");
  const double p = require(c.p, "p");
  const double q = require(c.q, "q");
  const std::string& f = require(c.f, "f");

  solver::ProblemSpec s(omega, FracOrder(p), FracOrder(q),
                        expr::Expression::parse(f));
  s.A = c.A;
  s.B = c.B;
  s.n = c.n;
  s.tol = c.tol;
  s.max_iter = c.max_iter;
  s.damping = c.damping;
  s.r_samples = c.r_samples;
  s.validate();
  return s;
}

}  // namespace fracosc::cli
