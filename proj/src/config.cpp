#include "dlab/config.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "dlab/boundary_data.hpp"
#include "dlab/domain.hpp"
#include "dlab/report.hpp"

namespace dlab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    return s.substr(1, s.size() - 2);
  return s;
}

bool parse_long(const std::string& s, long& out) {
  const char* b = s.c_str();
  char* e = nullptr;
  out = std::strtol(b, &e, 10);
  return e != b && *e == '\0';
}

bool parse_double(const std::string& s, double& out) {
  const char* b = s.c_str();
  char* e = nullptr;
  out = std::strtod(b, &e);
  return e != b && *e == '\0';
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  if (s.empty() || s[0] == '-') return false;
  const char* b = s.c_str();
  char* e = nullptr;
  out = std::strtoull(b, &e, 10);
  return e != b && *e == '\0';
}

}  // namespace

ConfigParse parse_config(const std::string& text) {
  ConfigParse res;
  RunConfig& c = res.config;
  auto err = [&](int line, const std::string& m) {
    res.errors.push_back({line, m});
  };

  int domain_line = 0, data_line = 0, k_line = 0, k_min_line = 0,
      k_max_line = 0;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      err(lineno, "expected 'key = value', got '" + trim(line) + "'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = unquote(trim(line.substr(eq + 1)));
    if (val.empty()) {
      err(lineno, "missing value for '" + key + "'");
      continue;
    }

    long lv = 0;
    double dv = 0;
    std::uint64_t uv = 0;
    if (key == "domain") {
      c.domain = val;
      domain_line = lineno;
    } else if (key == "data") {
      c.data = val;
      data_line = lineno;
    } else if (key == "K") {
      if (!parse_long(val, lv))
        err(lineno, "K: not an integer: '" + val + "'");
      else {
        c.K = static_cast<int>(lv);
        k_line = lineno;
      }
    } else if (key == "k_min") {
      if (!parse_long(val, lv))
        err(lineno, "k_min: not an integer: '" + val + "'");
      else {
        c.k_min = static_cast<int>(lv);
        k_min_line = lineno;
      }
    } else if (key == "k_max") {
      if (val == "auto")
        c.k_max = -1;
      else if (!parse_long(val, lv))
        err(lineno, "k_max: not an integer or 'auto': '" + val + "'");
      else {
        c.k_max = static_cast<int>(lv);
        k_max_line = lineno;
      }
    } else if (key == "tol") {
      if (!parse_double(val, dv))
        err(lineno, "tol: not a number: '" + val + "'");
      else if (!(dv > 0))
        err(lineno, "tol must be positive");
      else
        c.tol = dv;
    } else if (key == "epsilon") {
      if (val == "auto")
        c.epsilon = -1;
      else if (!parse_double(val, dv))
        err(lineno, "epsilon: not a number or 'auto': '" + val + "'");
      else if (!(dv > 0))
        err(lineno, "epsilon must be positive");
      else
        c.epsilon = dv;
    } else if (key == "n_walks") {
      if (!parse_long(val, lv))
        err(lineno, "n_walks: not an integer: '" + val + "'");
      else if (lv < 1)
        err(lineno, "n_walks must be >= 1");
      else
        c.n_walks = lv;
    } else if (key == "seed") {
      if (!parse_u64(val, uv))
        err(lineno, "seed: not an unsigned integer: '" + val + "'");
      else
        c.seed = uv;
    } else if (key == "out") {
      c.out = val;
    } else if (key == "emit_svg") {
      if (val == "true")
        c.emit_svg = true;
      else if (val == "false")
        c.emit_svg = false;
      else
        err(lineno, "emit_svg: expected true or false, got '" + val + "'");
    } else {
      err(lineno, "unknown key '" + key + "'");
    }
  }

  // cross-field range checks only fire once the fields themselves are sane,
  // so a bad K does not cascade into noise about k_min/k_max
  const bool k_ok = c.K >= 2;
  const bool k_min_ok = c.k_min >= 1;
  if (!k_ok) err(k_line, "K must be ≥ 2");
  if (!k_min_ok) err(k_min_line, "k_min must be >= 1");
  if (k_min_ok && c.k_max >= 0 && c.k_max < c.k_min)
    err(k_max_line, "k_max must be >= k_min");
  if (k_ok && c.k_max > c.K) err(k_max_line, "k_max must be <= K");
  if (k_ok && k_min_ok && c.k_min > c.K) err(k_min_line, "k_min must be <= K");

  Domain dom;
  bool dom_ok = false;
  try {
    dom = builtin_domain(c.domain);
    dom_ok = true;
  } catch (const std::invalid_argument& e) {
    err(domain_line, e.what());
  }
  if (dom_ok) {
    try {
      builtin_data(c.data, dom);
    } catch (const std::invalid_argument& e) {
      err(data_line, e.what());
    }
  }
  return res;
}

std::string render_config(const RunConfig& c) {
  std::string s;
  s += "domain = \"" + c.domain + "\"\n";
  s += "data = \"" + c.data + "\"\n";
  s += "K = " + std::to_string(c.K) + "\n";
  s += "k_min = " + std::to_string(c.k_min) + "\n";
  s += "k_max = " +
       (c.k_max < 0 ? std::string("auto") : std::to_string(c.k_max)) + "\n";
  s += "tol = " + format_shortest(c.tol) + "\n";
  s += "epsilon = " +
       (c.epsilon < 0 ? std::string("auto") : format_shortest(c.epsilon)) +
       "\n";
  s += "n_walks = " + std::to_string(c.n_walks) + "\n";
  s += "seed = " + std::to_string(c.seed) + "\n";
  s += "out = \"" + c.out + "\"\n";
  s += "emit_svg = " + std::string(c.emit_svg ? "true" : "false") + "\n";
  return s;
}

}  // namespace dlab
