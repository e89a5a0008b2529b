#include "dlab/domain.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dlab {

namespace {

[[noreturn]] void bad_spec(const std::string& text, const std::string& why) {
  throw std::invalid_argument("cannot parse '" + text + "': " + why);
}

double box_sdf(const Vec2& p, const Vec2& lo, const Vec2& hi) {
  // Exact signed distance to an axis-aligned box.
  const double qx = std::max(lo.x() - p.x(), p.x() - hi.x());
  const double qy = std::max(lo.y() - p.y(), p.y() - hi.y());
  const double ox = std::max(qx, 0.0);
  const double oy = std::max(qy, 0.0);
  return std::hypot(ox, oy) + std::min(std::max(qx, qy), 0.0);
}

}  // namespace

NameSpec parse_name_spec(const std::string& text) {
  NameSpec out;
  std::size_t i = 0;
  while (i < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
    ++i;
  out.name = text.substr(0, i);
  if (out.name.empty()) bad_spec(text, "expected an identifier");
  if (i == text.size()) return out;
  if (text[i] != '(') bad_spec(text, "expected '(' after name");
  if (text.back() != ')') bad_spec(text, "missing closing ')'");
  std::string inner = text.substr(i + 1, text.size() - i - 2);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    std::string tok = inner.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || (end && *end != '\0'))
      bad_spec(text, "bad numeric argument '" + tok + "'");
    out.args.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.args.empty()) bad_spec(text, "empty argument list");
  return out;
}

Domain builtin_domain(const std::string& spec) {
  NameSpec ns = parse_name_spec(spec);
  Domain d;
  d.name = spec;
  d.params = ns.args;

  auto want_args = [&](std::size_t n) {
    if (ns.args.size() != n)
      throw std::invalid_argument("domain '" + ns.name + "' takes " +
                                  std::to_string(n) + " argument(s), got " +
                                  std::to_string(ns.args.size()));
  };

  if (ns.name == "unit_square") {
    want_args(0);
    d.bbox = {Vec2(0, 0), Vec2(1, 1)};
    d.convex = true;
    d.sdf = [](const Vec2& p) { return box_sdf(p, Vec2(0, 0), Vec2(1, 1)); };
  } else if (ns.name == "disc") {
    want_args(1);
    const double r = ns.args[0];
    if (!(r > 0)) throw std::invalid_argument("disc radius must be positive");
    d.bbox = {Vec2(-r, -r), Vec2(r, r)};
    d.convex = true;
    d.sdf = [r](const Vec2& p) { return p.norm() - r; };
  } else if (ns.name == "annulus") {
    want_args(2);
    const double rho = ns.args[0];
    if (!(rho > 0 && rho < 1))
      throw std::invalid_argument("annulus inner radius must lie in (0,1)");
    if (ns.args[1] != 1.0)
      throw std::invalid_argument("annulus outer radius is fixed at 1");
    d.bbox = {Vec2(-1, -1), Vec2(1, 1)};
    d.convex = false;
    d.sdf = [rho](const Vec2& p) {
      const double r = p.norm();
      return std::max(rho - r, r - 1.0);
    };
  } else if (ns.name == "l_shape") {
    want_args(0);
    d.bbox = {Vec2(0, 0), Vec2(1, 1)};
    d.convex = false;
    d.sdf = [](const Vec2& p) {
      // Square minus the closed upper-right quadrant: intersection of the
      // square with the complement of [1/2,1]^2. max of the two sdfs is
      // exact inside and 1-Lipschitz everywhere.
      const double sq = box_sdf(p, Vec2(0, 0), Vec2(1, 1));
      const double cut = box_sdf(p, Vec2(0.5, 0.5), Vec2(1, 1));
      return std::max(sq, -cut);
    };
  } else {
    throw std::invalid_argument(
        "unknown domain '" + ns.name +
        "'; valid: unit_square, disc(r), annulus(rho,1), l_shape");
  }
  return d;
}

}  // namespace dlab
