#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dlab {

/// Flat run configuration, read from line-oriented `key = value` text.
/// k_max = -1 and epsilon = -1 mean "auto" (K and 1e-4 * bbox diagonal).
struct RunConfig {
  std::string domain = "disc(1)";
  std::string data = "fourier_mode(1)";
  int K = 8;
  int k_min = 2;
  int k_max = -1;
  double tol = 1e-10;
  double epsilon = -1;
  long n_walks = 100000;
  std::uint64_t seed = 42;
  std::string out = "out";
  bool emit_svg = false;

  int resolved_k_max() const { return k_max < 0 ? K : k_max; }

  bool operator==(const RunConfig&) const = default;
};

struct ConfigError {
  int line = 0;  // 0: not tied to a single line
  std::string message;
};

struct ConfigParse {
  RunConfig config;
  std::vector<ConfigError> errors;  // all problems, not just the first
  bool ok() const { return errors.empty(); }
};

/// Parses `key = value` lines ('#' comments, blank lines allowed; string
/// values may be double-quoted). Unknown keys, malformed values and
/// out-of-range parameters are all collected with their line numbers.
ConfigParse parse_config(const std::string& text);

/// Inverse of parse_config on valid configs: parse(render(c)).config == c.
std::string render_config(const RunConfig& c);

}  // namespace dlab
