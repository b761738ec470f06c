#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "maxclass/group.hpp"

namespace maxclass {

struct OptimizerConfig {
  int starts = 64;
  int max_iters = 5000;
  double grad_tol = 1e-10;
  double step_init = 0.1;
  std::uint64_t seed = 7;
  double backtrack_factor = 0.5;

  void validate() const;  // throws contract_violation
};

struct StartOutcome {
  bool converged = false;
  double log_volume = 0.0;
  int iterations = 0;
};

struct OptimizerReport {
  TorusPoint best;                 // canonical
  double best_log_volume = 0.0;    // max over converged starts
  std::vector<StartOutcome> per_start_outcomes;
  int distinct_optima_count = 0;   // clusters of converged optima at 1e-6
};

/// Called once per accepted ascent iteration (strict log-volume increases
/// only; the terminal Newton polish is tracked by gradient norm instead).
using AscentObserver = std::function<void(int start, int iteration, double log_volume)>;

/// Multistart projected gradient ascent on log_volume over the torus.
///
/// Each start samples a uniform interior point of the fundamental domain
/// (margin 1e-3), ascends with backtracking line search (family A iterates
/// stay on the affine slice sum(theta) = 2*pi*m, m frozen from the start's
/// initial sum), and finishes with a damped Newton polish on the gradient
/// system to reach grad_tol below the resolution of double-precision
/// objective comparisons. Deterministic for a fixed (spec, config): the
/// random stream is split per start from the seed, so parallel and serial
/// execution agree exactly. Throws optimizer_failure if no start converges.
///
/// When an observer is supplied the starts run serially so callbacks arrive
/// in order.
OptimizerReport maximize(const GroupSpec& spec, const OptimizerConfig& config = {},
                         const AscentObserver& observer = {});

/// Equal-spacing stationarity residual for family A: the spread (max minus
/// min) of cot(gap/2) over consecutive gaps of a strictly increasing angle
/// vector, including the wrap-around gap. Zero iff all gaps are equal.
/// Throws singularity_error on a zero gap.
double lagrange_residual_A(const TorusPoint& t, int n);

}  // namespace maxclass
