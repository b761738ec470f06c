#include "maxclass/optimizer.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "maxclass/errors.hpp"

namespace maxclass {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kStartMargin = 1e-3;
constexpr double kClusterTol = 1e-6;

// Deterministic, platform-independent generator; one independently seeded
// stream per start so serial and parallel runs agree bit for bit.
struct SplitMix64 {
  std::uint64_t state;

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  explicit SplitMix64(std::uint64_t seed, std::uint64_t stream)
      : state(mix(mix(seed) + stream)) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Projects a family-A gradient onto the constraint hyperplane sum = const.
void project_gradient_A(std::vector<double>& g) {
  double mean = 0.0;
  for (double x : g) mean += x;
  mean /= g.size();
  for (double& x : g) x -= mean;
}

// Re-anchors a family-A iterate to its frozen slice sum(theta) = 2*pi*m.
void project_point_A(TorusPoint& t, long m) {
  double sum = 0.0;
  for (double x : t) sum += x;
  double shift = (kTwoPi * m - sum) / t.size();
  for (double& x : t) x += shift;
}

// Hessian of log_volume: sum over roots of -csc^2(alpha/2)/2 * c c^T.
Eigen::MatrixXd log_volume_hessian(const GroupSpec& spec, const TorusPoint& t) {
  const auto& rows = positive_root_coefficients(spec);
  const auto values = positive_root_values(spec, t);
  const int n = spec.torus_dim();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    double s = std::sin(0.5 * values[a]);
    if (s == 0.0) throw singularity_error("singular point in Hessian", a);
    double w = -0.5 / (s * s);
    for (int i = 0; i < n; ++i) {
      if (rows[a][i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (rows[a][j] != 0) h(i, j) += w * rows[a][i] * rows[a][j];
    }
  }
  return h;
}

struct StartResult {
  StartOutcome outcome;
  TorusPoint point;
};

TorusPoint sample_start(const GroupSpec& spec, SplitMix64& rng, long& slice_m) {
  const int n = spec.torus_dim();
  TorusPoint t(n);
  for (int tries = 0; tries < 100; ++tries) {
    switch (spec.family) {
      case Family::A:
      case Family::G2:
        for (double& x : t) x = rng.uniform(kStartMargin, kTwoPi - kStartMargin);
        break;
      case Family::B:
      case Family::C:
      case Family::D:
        for (double& x : t) x = rng.uniform(kStartMargin, M_PI - kStartMargin);
        break;
    }
    if (spec.family == Family::A) {
      double sum = 0.0;
      for (double x : t) sum += x;
      slice_m = std::lround(sum / kTwoPi);
      project_point_A(t, slice_m);
    }
    if (std::isfinite(log_volume(spec, t))) return t;
  }
  return t;  // astronomically unlikely; ascent will report non-convergence
}

StartResult run_start(const GroupSpec& spec, const OptimizerConfig& config, int start_index,
                      const AscentObserver& observer) {
  SplitMix64 rng(config.seed, static_cast<std::uint64_t>(start_index));
  long slice_m = 0;
  TorusPoint t = sample_start(spec, rng, slice_m);
  const bool is_A = spec.family == Family::A;

  double f = log_volume(spec, t);
  int iterations = 0;

  // Ascent phase: backtracking line search, strict increases only. Objective
  // comparisons in double resolve gradient norms down to roughly 1e-5, so the
  // phase targets that and the polish below finishes the job.
  const double ascent_tol = std::max(config.grad_tol, 1e-5);
  double grad_norm = std::numeric_limits<double>::infinity();
  for (; iterations < config.max_iters; ++iterations) {
    auto g = log_volume_gradient(spec, t);
    if (is_A) project_gradient_A(g);
    grad_norm = norm2(g);
    if (grad_norm <= ascent_tol) break;

    double step = config.step_init;
    bool accepted = false;
    while (step > 1e-18) {
      TorusPoint trial = t;
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += step * g[i];
      if (is_A) project_point_A(trial, slice_m);
      double ft = log_volume(spec, trial);
      if (ft > f + 1e-4 * step * grad_norm * grad_norm) {
        t = std::move(trial);
        f = ft;
        accepted = true;
        break;
      }
      step *= config.backtrack_factor;
    }
    if (!accepted) break;  // objective differences no longer resolvable
    if (observer) observer(start_index, iterations, f);
  }

  // Polish phase: damped Newton on the gradient system, accepted on gradient
  // norm decrease (the objective is flat to machine precision here).
  const int n = spec.torus_dim();
  for (int polish = 0; polish < 100 && grad_norm > config.grad_tol; ++polish) {
    ++iterations;
    auto g = log_volume_gradient(spec, t);
    if (is_A) project_gradient_A(g);
    Eigen::VectorXd gv(n);
    for (int i = 0; i < n; ++i) gv(i) = g[i];

    Eigen::VectorXd d(n);
    if (is_A) {
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + 1, n + 1);
      kkt.topLeftCorner(n, n) = log_volume_hessian(spec, t);
      kkt.block(0, n, n, 1).setOnes();
      kkt.block(n, 0, 1, n).setOnes();
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
      rhs.head(n) = -gv;
      d = kkt.fullPivLu().solve(rhs).head(n);
    } else {
      d = log_volume_hessian(spec, t).fullPivLu().solve(-gv);
    }
    if (!d.allFinite() || d.norm() > 1.0) d = gv * (config.step_init / (1.0 + gv.norm()));

    bool improved = false;
    double scale = 1.0;
    for (int halvings = 0; halvings < 50; ++halvings, scale *= 0.5) {
      TorusPoint trial = t;
      for (int i = 0; i < n; ++i) trial[i] += scale * d(i);
      if (is_A) project_point_A(trial, slice_m);
      try {
        auto gt = log_volume_gradient(spec, trial);
        if (is_A) project_gradient_A(gt);
        double gn = norm2(gt);
        if (gn < 0.9 * grad_norm) {
          t = std::move(trial);
          grad_norm = gn;
          improved = true;
          break;
        }
      } catch (const singularity_error&) {
        // reject and halve
      }
    }
    if (!improved) break;
  }

  StartResult result;
  result.outcome.converged = grad_norm <= config.grad_tol;
  result.outcome.log_volume = log_volume(spec, t);
  result.outcome.iterations = iterations;
  result.point = canonicalize(spec, t);
  return result;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (starts < 1) throw contract_violation("starts must be positive");
  if (max_iters < 1) throw contract_violation("max_iters must be positive");
  if (!(grad_tol > 0)) throw contract_violation("grad_tol must be positive");
  if (!(step_init > 0)) throw contract_violation("step_init must be positive");
  if (!(backtrack_factor > 0 && backtrack_factor < 1))
    throw contract_violation("backtrack_factor must lie in (0, 1)");
}

OptimizerReport maximize(const GroupSpec& spec, const OptimizerConfig& config,
                         const AscentObserver& observer) {
  config.validate();

  std::vector<StartResult> results(config.starts);
  if (observer) {
    for (int s = 0; s < config.starts; ++s) results[s] = run_start(spec, config, s, observer);
  } else {
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(config.starts));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int s = next.fetch_add(1); s < config.starts; s = next.fetch_add(1))
          results[s] = run_start(spec, config, s, {});
      });
    for (auto& th : pool) th.join();
  }

  OptimizerReport report;
  report.per_start_outcomes.reserve(config.starts);
  for (const auto& r : results) report.per_start_outcomes.push_back(r.outcome);

  int best_start = -1;
  for (int s = 0; s < config.starts; ++s) {
    if (!results[s].outcome.converged) continue;
    if (best_start < 0 || results[s].outcome.log_volume > results[best_start].outcome.log_volume)
      best_start = s;
  }
  if (best_start < 0)
    throw optimizer_failure("no optimizer start converged; this indicates a gradient bug");
  report.best = results[best_start].point;
  report.best_log_volume = results[best_start].outcome.log_volume;

  std::vector<TorusPoint> clusters;
  for (const auto& r : results) {
    if (!r.outcome.converged) continue;
    bool found = false;
    for (const auto& c : clusters)
      if (weyl_distance(spec, r.point, c) <= kClusterTol) {
        found = true;
        break;
      }
    if (!found) clusters.push_back(r.point);
  }
  report.distinct_optima_count = static_cast<int>(clusters.size());
  return report;
}

double lagrange_residual_A(const TorusPoint& t, int n) {
  if (static_cast<int>(t.size()) != n || n < 2)
    throw contract_violation("lagrange_residual_A needs n >= 2 angles");
  for (int i = 0; i + 1 < n; ++i)
    if (!(t[i] < t[i + 1]))
      throw contract_violation("angles must be strictly increasing");

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < n; ++i) {
    double gap = (i + 1 < n) ? t[i + 1] - t[i] : t[0] + kTwoPi - t[n - 1];
    double s = std::sin(0.5 * gap);
    if (s == 0.0) throw singularity_error("zero gap between consecutive angles", i);
    double cot = std::cos(0.5 * gap) / s;
    lo = std::min(lo, cot);
    hi = std::max(hi, cot);
  }
  return hi - lo;
}

}  // namespace maxclass
