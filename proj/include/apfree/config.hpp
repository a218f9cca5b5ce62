#pragma once

// Runtime configuration for the CLI: a plain key=value file named by an
// environment variable, with command-line flags taking precedence. Library
// code never reads the environment; only the CLI applies a config.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "parse.hpp"
#include "rational.hpp"

namespace apfree {

struct config {
  std::int64_t default_n = 3;
  std::int64_t search_depth = 1000000;
  rational max_refine_width = rational(integer(1), integer(1) << 256);
  // Consulted only by subcommands that have both renderings (equidist); the
  // contract default there is the CSV table.
  std::string output_format = "csv";

  void validate() const {
    if (default_n < 1) throw std::invalid_argument("config: default_N must be >= 1");
    if (search_depth < 1) throw std::invalid_argument("config: search_depth must be >= 1");
    if (max_refine_width.sign() <= 0)
      throw std::invalid_argument("config: max_refine_width must be positive");
    if (output_format != "json" && output_format != "csv")
      throw std::invalid_argument("config: output_format must be json or csv");
  }
};

inline config parse_config(std::istream& in) {
  config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "default_N") {
      c.default_n = std::stoll(value);
    } else if (key == "search_depth") {
      c.search_depth = std::stoll(value);
    } else if (key == "max_refine_width") {
      c.max_refine_width = parse_rational(value);
    } else if (key == "output_format") {
      c.output_format = value;
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key \"" +
                                  key + "\"");
    }
  }
  c.validate();
  return c;
}

// Loads the file named by the environment variable, or defaults when unset.
inline config load_config_from_env(const char* env_var = "APFREE_CONFIG") {
  const char* path = std::getenv(env_var);
  if (!path || !*path) return config{};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("cannot open config file ") + path);
  return parse_config(in);
}

}  // namespace apfree
