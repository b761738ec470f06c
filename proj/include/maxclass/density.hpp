#pragma once

#include <utility>
#include <vector>

#include "maxclass/errors.hpp"

namespace maxclass {

/// Equidistribution diagnostics for a sorted angle set in [0, pi].
struct DensityReport {
  int n = 0;
  double ks_statistic = 0.0;      // sup distance to the uniform CDF theta/pi
  double max_gap_deviation = 0.0; // max |gap - pi/n| over consecutive gaps
};

/// Coefficient k(x) of the oscillation equation, restricted to two named
/// built-ins so problems stay serializable.
struct Coefficient {
  enum class Kind { Constant, ChebWeight };
  Kind kind = Kind::Constant;
  double value = 1.0;  // the constant c; ignored for ChebWeight

  static Coefficient constant(double c) { return {Kind::Constant, c}; }
  static Coefficient chebweight() { return {Kind::ChebWeight, 1.0}; }

  double operator()(double x) const;
  /// Domain of definition: all reals for Constant, (-1, 1) for ChebWeight.
  bool contains(double x) const;
};

/// Initial value problem v'' = -lambda^2 k(x)^2 v, v(x0) = 1, v'(x0) = 0 on
/// the window [center - half_width, center + half_width], with bounds
/// 0 < beta <= k <= alpha on the window.
struct OscillationProblem {
  Coefficient coefficient;
  double lambda = 1.0;
  double center = 0.0;
  double half_width = 1.0;
  double beta = 1.0;
  double alpha = 1.0;

  /// Fills (beta, alpha) with the tight extremes of the built-in coefficient
  /// on the window.
  static OscillationProblem with_bounds(Coefficient k, double lambda, double center,
                                        double half_width);

  void validate() const;  // throws contract_violation
};

/// KS statistic against uniform on [0, pi] plus the max gap deviation.
/// Input must be sorted ascending and non-empty.
DensityReport equidistribution_report(const std::vector<double>& angles);

/// Number of zeros of v in the window, by adaptive Dormand-Prince 5(4)
/// integration outward from the center (tolerance 1e-10) and sign-change
/// counting on dense output, each crossing refined by bisection to 1e-9.
/// Throws integration_error on step-size underflow.
int count_ode_zeros(const OscillationProblem& problem);

/// The comparison-theorem sandwich (2*delta*lambda*beta/pi - 1,
///                                   2*delta*lambda*alpha/pi + 2).
std::pair<double, double> sturm_bounds(double lambda, double delta, double alpha,
                                       double beta);

/// Limiting zero density 1/(pi*sqrt(1-x0^2)) for the Chebyshev weight;
/// |x0| >= 1 is a domain error.
double limiting_density(double x0);

}  // namespace maxclass
