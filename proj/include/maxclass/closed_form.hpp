#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "maxclass/group.hpp"
#include "maxclass/polynomial.hpp"

namespace maxclass {

/// Certificate values are exact rationals where the answer is rational
/// (elementary symmetric functions of cosines) and doubles for residuals.
using CertificateValue = std::variant<Rational, double>;

std::string certificate_to_string(const CertificateValue& v);

/// Closed-form largest conjugacy class for one group.
struct SolveResult {
  GroupSpec spec;
  TorusPoint angles;                          // canonical
  std::vector<double> cosines;                // ascending; empty for family A
  std::optional<RationalPolynomial> polynomial;  // absent for family A
  double log_volume = 0.0;
  std::map<std::string, CertificateValue> certificates;
};

/// The monic rational polynomial whose roots are the cosines of the optimal
/// rotation angles: the downward ODE recurrences for B, C, D and the fixed
/// cubic for G2. Family A has no polynomial (contract_violation).
RationalPolynomial family_polynomial(Family family, int rank);

SolveResult solve_A(int n);  // n >= 2
SolveResult solve_B(int n);  // n >= 1
SolveResult solve_C(int n);  // n >= 1
SolveResult solve_D(int n);  // n >= 2
SolveResult solve_G2();

/// Dispatch on spec.family.
SolveResult solve(const GroupSpec& spec);

/// Named checks for the G2 answer: the equalized sextic g at the three
/// cosines, the quartic satisfied by the cosine sum, its exact factorization,
/// and the stationarity identity of the inverse sines. Returns the named
/// residuals; throws certificate_error naming the first failing check.
std::map<std::string, double> g2_certificate_suite(const SolveResult& result);

}  // namespace maxclass
