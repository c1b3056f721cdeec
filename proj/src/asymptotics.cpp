#include "galelab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "galelab/errors.hpp"
#include "galelab/types.hpp"

namespace galelab {

namespace {

std::string fmt_delta(double delta) { return format_double(delta); }

}  // namespace

Threshold parse_threshold(const std::string& name) {
  if (name == "strong") return Threshold::strong;
  if (name == "weak") return Threshold::weak;
  throw DomainError("unknown threshold '" + name + "' (expected strong|weak)");
}

std::string to_string(Threshold which) { return which == Threshold::strong ? "strong" : "weak"; }

double entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("entropy: x outside [0,1]: " + fmt_delta(x));
  const auto xlogx = [](double t) { return t == 0.0 ? 0.0 : t * std::log(t); };
  return -xlogx(x) - xlogx(1.0 - x);
}

double g_exponent(const AsymptoticParams& p) {
  if (!(p.delta >= 0.0 && p.delta <= 1.0)) throw DomainError("G: delta outside [0,1]");
  if (!(p.rho >= 0.0 && p.rho <= 1.0)) throw DomainError("G: rho outside [0,1]");
  return entropy(p.delta) + p.delta * entropy(p.rho) - (1.0 - p.delta * p.rho) * std::numbers::ln2;
}

double rho_strong(double delta, double tol) {
  if (!(delta > 0.5 && delta < 1.0)) {
    throw DomainError("rho_strong: need 1/2 < delta < 1, got delta=" + fmt_delta(delta));
  }
  if (!(tol > 0.0)) throw DomainError("rho_strong: tol must be positive");
  const auto g = [delta](double rho) { return g_exponent({delta, rho}); };

  double lo = kBracketEps;
  double hi = 1.0 - kBracketEps;
  if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
    throw DomainError("rho_strong: no sign change on the bracket at delta=" + fmt_delta(delta));
  }
  // Bisect to full double resolution; the bracket halves until the midpoint
  // coincides with an endpoint.
  for (;;) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double root = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
  if (!(std::abs(g(root)) < tol)) {
    throw DomainError("rho_strong: residual above tol at delta=" + fmt_delta(delta));
  }
  return root;
}

double rho_weak(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("rho_weak: need 0 < delta < 1, got delta=" + fmt_delta(delta));
  }
  // 2 delta - 1 is exact for delta >= 1/2, leaving a single rounding.
  return delta <= 0.5 ? 0.0 : (2.0 * delta - 1.0) / delta;
}

std::vector<CurvePoint> threshold_curve(Threshold which, std::span<const double> grid, double tol) {
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double delta : grid) {
    CurvePoint pt{delta, std::nullopt, {}};
    try {
      pt.rho = which == Threshold::strong ? rho_strong(delta, tol) : rho_weak(delta);
    } catch (const DomainError& e) {
      pt.error = e.what();
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace galelab
