#pragma once

#include <string>
#include <vector>

#include "maxclass/family.hpp"

namespace maxclass {

/// Selects one of the supported root systems.
///
/// Rank conventions: A rank n is SU(n) (n >= 2); B rank n is SO(2n+1)
/// (n >= 1); C rank n is Sp(2n) (n >= 1); D rank n is SO(2n) (n >= 2);
/// G2 has fixed rank 2.
struct GroupSpec {
  Family family;
  int rank;

  GroupSpec(Family family, int rank);

  /// Number of stored angle coordinates (equals rank for every family).
  int torus_dim() const { return rank; }
  int positive_root_count() const;
  std::string name() const { return family_name(family); }

  bool operator==(const GroupSpec& o) const = default;
};

/// Angles on the maximal torus, in radians. Length must equal torus_dim():
/// theta_0..theta_{n-1} for A, theta_1..theta_n for B/C/D, and (theta_1,
/// theta_2) for G2 with theta_3 = -theta_1 - theta_2 implied.
using TorusPoint = std::vector<double>;

/// Integer coefficient rows of the positive roots as linear forms in the
/// stored angles, in the documented fixed order:
///   A:  theta_k - theta_j, (j,k) lexicographic, j < k
///   B:  theta_j for j = 1..n, then theta_k - theta_j, theta_k + theta_j lex (j,k)
///   C:  2*theta_j for j = 1..n, then pairs as for B
///   D:  theta_k - theta_j, theta_k + theta_j, lex (j,k)
///   G2: theta_1, theta_2, theta_1+theta_2, theta_1-theta_2,
///       theta_1+2*theta_2, 2*theta_1+theta_2
const std::vector<std::vector<int>>& positive_root_coefficients(const GroupSpec& spec);

/// Values of the positive roots at the given torus point, in the fixed order
/// above.
std::vector<double> positive_root_values(const GroupSpec& spec, const TorusPoint& t);

/// log V(t) = sum over positive roots of 2*log|sin(alpha/2)|. Returns
/// -infinity when any factor vanishes exactly (the singular set).
double log_volume(const GroupSpec& spec, const TorusPoint& t);

/// Gradient of log_volume with respect to the stored angles
/// (sum of cot(alpha/2) times the root's coefficient row). For G2 the
/// dependent third angle is absorbed into the six linear forms.
/// Throws singularity_error at singular points.
std::vector<double> log_volume_gradient(const GroupSpec& spec, const TorusPoint& t);

/// Maps an arbitrary angle vector into the family's fundamental domain:
///   A:      each angle reduced mod 2*pi into [0, 2*pi), then sorted
///   B/C/D:  each angle folded into [0, pi] (mod 2*pi, then reflected), sorted
///   G2:     lexicographically smallest among the 12 Weyl images reduced
///           mod 2*pi coordinate-wise into [0, 2*pi)^2
/// Idempotent and log_volume-preserving.
TorusPoint canonicalize(const GroupSpec& spec, const TorusPoint& t);

/// Max-norm distance between the Weyl orbits of two points; robust near the
/// boundary of the fundamental domain (wrap-around for A, the 12-element
/// orbit for G2).
double weyl_distance(const GroupSpec& spec, const TorusPoint& a, const TorusPoint& b);

}  // namespace maxclass
