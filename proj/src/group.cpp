#include "maxclass/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "maxclass/errors.hpp"

namespace maxclass {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// x reduced into [0, 2*pi).
double mod_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

// x folded into [0, pi] (reduction mod 2*pi followed by reflection).
double fold_to_half(double x) {
  double r = mod_two_pi(x);
  return r > M_PI ? kTwoPi - r : r;
}

double circular_distance(double a, double b) {
  double d = std::abs(mod_two_pi(a) - mod_two_pi(b));
  return std::min(d, kTwoPi - d);
}

// The 12 Weyl images of a G2 point: permutations of (t1, t2, t3) with
// t3 = -t1 - t2, and global negation, expressed on the two stored
// coordinates. All are integer-linear, so they commute with the 2*pi*Z^2
// torus periodicity.
std::vector<std::array<double, 2>> g2_orbit(double t1, double t2) {
  const double t3 = -t1 - t2;
  std::vector<std::array<double, 2>> orbit = {
      {t1, t2}, {t2, t1}, {t1, t3}, {t3, t1}, {t2, t3}, {t3, t2}};
  for (int i = 0; i < 6; ++i) orbit.push_back({-orbit[i][0], -orbit[i][1]});
  for (auto& p : orbit) {
    p[0] = mod_two_pi(p[0]);
    p[1] = mod_two_pi(p[1]);
  }
  return orbit;
}

void check_dim(const GroupSpec& spec, const TorusPoint& t) {
  if (static_cast<int>(t.size()) != spec.torus_dim())
    throw contract_violation("torus point has " + std::to_string(t.size()) +
                             " angles; family " + spec.name() + " rank " +
                             std::to_string(spec.rank) + " needs " +
                             std::to_string(spec.torus_dim()));
}

}  // namespace

GroupSpec::GroupSpec(Family family_, int rank_) : family(family_), rank(rank_) {
  switch (family) {
    case Family::A:
      if (rank < 2) throw contract_violation("family A needs rank >= 2 (SU(n), n >= 2)");
      break;
    case Family::B:
      if (rank < 1) throw contract_violation("family B needs rank >= 1");
      break;
    case Family::C:
      if (rank < 1) throw contract_violation("family C needs rank >= 1");
      break;
    case Family::D:
      if (rank < 2) throw contract_violation("family D needs rank >= 2");
      break;
    case Family::G2:
      if (rank != 2) throw contract_violation("G2 has fixed rank 2");
      break;
  }
}

int GroupSpec::positive_root_count() const {
  switch (family) {
    case Family::A: return rank * (rank - 1) / 2;
    case Family::B:
    case Family::C: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::G2: return 6;
  }
  return 0;
}

const std::vector<std::vector<int>>& positive_root_coefficients(const GroupSpec& spec) {
  static std::map<std::pair<Family, int>, std::vector<std::vector<int>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  auto key = std::make_pair(spec.family, spec.rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int n = spec.rank;
  std::vector<std::vector<int>> rows;
  auto single = [&](int j, int scale) {
    std::vector<int> r(n, 0);
    r[j] = scale;
    rows.push_back(std::move(r));
  };
  auto pair_roots = [&]() {  // theta_k - theta_j then theta_k + theta_j, lex (j,k)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<int> diff(n, 0), sum(n, 0);
        diff[j] = -1; diff[k] = 1;
        sum[j] = 1; sum[k] = 1;
        rows.push_back(std::move(diff));
        rows.push_back(std::move(sum));
      }
  };

  switch (spec.family) {
    case Family::A:
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          std::vector<int> r(n, 0);
          r[j] = -1; r[k] = 1;
          rows.push_back(std::move(r));
        }
      break;
    case Family::B:
      for (int j = 0; j < n; ++j) single(j, 1);
      pair_roots();
      break;
    case Family::C:
      for (int j = 0; j < n; ++j) single(j, 2);
      pair_roots();
      break;
    case Family::D:
      pair_roots();
      break;
    case Family::G2:
      rows = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}};
      break;
  }
  return cache.emplace(key, std::move(rows)).first->second;
}

std::vector<double> positive_root_values(const GroupSpec& spec, const TorusPoint& t) {
  check_dim(spec, t);
  const auto& rows = positive_root_coefficients(spec);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) {
    double v = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) v += row[i] * t[i];
    values.push_back(v);
  }
  return values;
}

double log_volume(const GroupSpec& spec, const TorusPoint& t) {
  const auto values = positive_root_values(spec, t);
  double acc = 0.0;
  for (double v : values) {
    double s = std::sin(0.5 * v);
    if (s == 0.0) return -std::numeric_limits<double>::infinity();
    acc += 2.0 * std::log(std::abs(s));
  }
  return acc;
}

std::vector<double> log_volume_gradient(const GroupSpec& spec, const TorusPoint& t) {
  const auto& rows = positive_root_coefficients(spec);
  const auto values = positive_root_values(spec, t);
  std::vector<double> grad(t.size(), 0.0);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    double s = std::sin(0.5 * values[a]);
    if (s == 0.0)
      throw singularity_error("positive root " + std::to_string(a) +
                                  " vanishes mod 2*pi; gradient undefined",
                              a);
    double cot = std::cos(0.5 * values[a]) / s;
    for (std::size_t i = 0; i < grad.size(); ++i)
      if (rows[a][i] != 0) grad[i] += rows[a][i] * cot;
  }
  return grad;
}

TorusPoint canonicalize(const GroupSpec& spec, const TorusPoint& t) {
  check_dim(spec, t);
  TorusPoint out = t;
  switch (spec.family) {
    case Family::A:
      for (double& x : out) x = mod_two_pi(x);
      std::sort(out.begin(), out.end());
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (double& x : out) x = fold_to_half(x);
      std::sort(out.begin(), out.end());
      break;
    case Family::G2: {
      auto orbit = g2_orbit(t[0], t[1]);
      out = {orbit[0][0], orbit[0][1]};
      for (const auto& p : orbit) {
        if (p[0] < out[0] || (p[0] == out[0] && p[1] < out[1])) out = {p[0], p[1]};
      }
      break;
    }
  }
  return out;
}

double weyl_distance(const GroupSpec& spec, const TorusPoint& a, const TorusPoint& b) {
  check_dim(spec, a);
  check_dim(spec, b);
  const TorusPoint ca = canonicalize(spec, a);
  const TorusPoint cb = canonicalize(spec, b);
  const int n = spec.torus_dim();

  switch (spec.family) {
    case Family::A: {
      // Sorted circular multisets: the optimal matching is one of the n
      // cyclic alignments.
      double best = std::numeric_limits<double>::infinity();
      for (int shift = 0; shift < n; ++shift) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k)
          worst = std::max(worst, circular_distance(ca[(k + shift) % n], cb[k]));
        best = std::min(best, worst);
      }
      return best;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      // Folding and sorting are both contractions in the max norm, so the
      // canonical forms compare directly.
      double worst = 0.0;
      for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(ca[k] - cb[k]));
      return worst;
    }
    case Family::G2: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : g2_orbit(a[0], a[1])) {
        double worst = std::max(circular_distance(p[0], cb[0]),
                                circular_distance(p[1], cb[1]));
        best = std::min(best, worst);
      }
      return best;
    }
  }
  return 0.0;
}

}  // namespace maxclass
