#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galelab {

enum class Threshold { strong, weak };

Threshold parse_threshold(const std::string& name);
std::string to_string(Threshold which);

struct AsymptoticParams {
  double delta = 0.5;  // limit of d/N, in (0, 1)
  double rho = 0.0;    // limit of k/d, in [0, 1]
};

/// Binary entropy in nats, H(x) = -x log x - (1-x) log(1-x), with 0 log 0 = 0.
double entropy(double x);

/// G(delta, rho) = H(delta) + delta H(rho) - (1 - delta rho) log 2.
double g_exponent(const AsymptoticParams& p);

/// Lower end of the bisection bracket for rho_strong.
inline constexpr double kBracketEps = 1e-15;

/// The unique zero of G(delta, .) in (0, 1), for 1/2 < delta < 1.
/// G(delta, .) is negative to the left of the returned root.
double rho_strong(double delta, double tol = 1e-12);

/// max(0, 2 - 1/delta), for 0 < delta < 1.
double rho_weak(double delta);

struct CurvePoint {
  double delta = 0.0;
  std::optional<double> rho;  // empty when delta is outside the domain
  std::string error;
};

/// Tabulates rho_strong or rho_weak over `grid`, in grid order. Points outside
/// the domain carry an error message naming the offending delta.
std::vector<CurvePoint> threshold_curve(Threshold which, std::span<const double> grid,
                                        double tol = 1e-12);

}  // namespace galelab
