#include "maxclass/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "maxclass/optimizer.hpp"
#include "maxclass/record.hpp"

namespace maxclass {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Gradient norm used by the stationarity certificate; family A projects onto
// the slice sum(theta) = const, where the raw gradient already sums to zero
// analytically.
double stationarity_norm(const GroupSpec& spec, const TorusPoint& t) {
  auto g = log_volume_gradient(spec, t);
  if (spec.family == Family::A) {
    double mean = 0.0;
    for (double x : g) mean += x;
    mean /= g.size();
    for (double& x : g) x -= mean;
  }
  return norm2(g);
}

// Shared tail for the polynomial families B, C, D: isolate the cosines,
// take arccos in reverse (cosines ascend, angles descend), and attach the
// stationarity and discriminant certificates.
SolveResult finish_polynomial_family(const GroupSpec& spec, RationalPolynomial p) {
  SolveResult r{spec, {}, real_roots_unit_interval(p), std::move(p), 0.0, {}};
  const int n = spec.rank;
  r.angles.resize(n);
  for (int i = 0; i < n; ++i) r.angles[i] = std::acos(r.cosines[n - 1 - i]);
  r.angles = canonicalize(spec, r.angles);
  r.log_volume = log_volume(spec, r.angles);
  r.certificates["grad_norm"] = stationarity_norm(spec, r.angles);
  if (spec.family == Family::D)
    r.certificates["sqrt_discriminant"] = sqrt_discriminant(r.cosines);
  else
    r.certificates["modified_sqrt_discriminant"] =
        modified_sqrt_discriminant(spec.family, r.cosines);
  return r;
}

}  // namespace

std::string certificate_to_string(const CertificateValue& v) {
  if (std::holds_alternative<Rational>(v)) return to_string(std::get<Rational>(v));
  return format_double(std::get<double>(v));
}

RationalPolynomial family_polynomial(Family family, int rank) {
  switch (family) {
    case Family::A:
      throw contract_violation("family A has no cosine polynomial");
    case Family::D: {
      GroupSpec check(family, rank);
      const int n = rank;
      // a_m (n(n-1) - m(m-1)) = -(m+2)(m+1) a_{m+2}, a_n = 1; opposite-parity
      // coefficients vanish.
      std::vector<Rational> a(n + 1, Rational(0));
      a[n] = 1;
      for (int m = n - 2; m >= 0; m -= 2)
        a[m] = a[m + 2] * Rational(-(m + 2) * (m + 1), n * (n - 1) - m * (m - 1));
      return RationalPolynomial(std::move(a));
    }
    case Family::C: {
      GroupSpec check(family, rank);
      const int n = rank;
      // a_m (n(n+1) - m(m+1)) = -(m+2)(m+1) a_{m+2}, a_n = 1.
      std::vector<Rational> a(n + 1, Rational(0));
      a[n] = 1;
      for (int m = n - 2; m >= 0; m -= 2)
        a[m] = a[m + 2] * Rational(-(m + 2) * (m + 1), n * (n + 1) - m * (m + 1));
      return RationalPolynomial(std::move(a));
    }
    case Family::B: {
      GroupSpec check(family, rank);
      const int n = rank;
      // From (1-x^2)p'' - (1+x)p' + n^2 p = 0:
      //   a_m (n^2 - m^2) = (m+1)(a_{m+1} - (m+2) a_{m+2}), a_n = 1.
      std::vector<Rational> a(n + 2, Rational(0));
      a[n] = 1;
      for (int m = n - 1; m >= 0; --m)
        a[m] = (a[m + 1] - a[m + 2] * (m + 2)) * Rational(m + 1, n * n - m * m);
      return RationalPolynomial(std::move(a));
    }
    case Family::G2:
      return RationalPolynomial::from_strings({"-7/25", "-3/5", "3/5", "1"});
  }
  throw contract_violation("unknown family");
}

SolveResult solve_A(int n) {
  GroupSpec spec(Family::A, n);
  TorusPoint angles(n);
  for (int k = 0; k < n; ++k)
    angles[k] = (n % 2 == 1) ? 2.0 * M_PI * k / n : M_PI * (2 * k + 1) / n;
  SolveResult r{spec, canonicalize(spec, angles), {}, std::nullopt, 0.0, {}};
  r.log_volume = log_volume(spec, r.angles);
  r.certificates["grad_norm"] = stationarity_norm(spec, r.angles);
  r.certificates["lagrange_residual"] = lagrange_residual_A(r.angles, n);
  return r;
}

SolveResult solve_B(int n) { return finish_polynomial_family(GroupSpec(Family::B, n), family_polynomial(Family::B, n)); }
SolveResult solve_C(int n) { return finish_polynomial_family(GroupSpec(Family::C, n), family_polynomial(Family::C, n)); }
SolveResult solve_D(int n) { return finish_polynomial_family(GroupSpec(Family::D, n), family_polynomial(Family::D, n)); }

SolveResult solve_G2() {
  GroupSpec spec(Family::G2, 2);
  RationalPolynomial p = family_polynomial(Family::G2, 2);
  std::vector<double> cosines = real_roots_unit_interval(p);  // alpha < beta < gamma

  // theta_1 = arccos(gamma), theta_2 = arccos(beta), theta_3 = -theta_1-theta_2;
  // the sign convention makes arccos(alpha) = theta_1 + theta_2.
  const double theta1 = std::acos(cosines[2]);
  const double theta2 = std::acos(cosines[1]);
  const double rho = std::acos(cosines[0]) - theta1 - theta2;
  if (std::abs(rho) > 1e-10)
    throw error("G2 angle reconstruction failed (residual " + std::to_string(rho) +
                "); this indicates a root-finding bug");

  SolveResult r{spec, canonicalize(spec, {theta1, theta2}), std::move(cosines), std::move(p),
                0.0, {}};
  r.log_volume = log_volume(spec, r.angles);
  r.certificates["grad_norm"] = stationarity_norm(spec, r.angles);
  r.certificates["angle_residual"] = std::abs(rho);
  // Elementary symmetric functions of the cosines, exact by Vieta.
  r.certificates["A_sym"] = Rational(-r.polynomial->coeff(2));
  r.certificates["B_sym"] = r.polynomial->coeff(1);
  r.certificates["C_sym"] = Rational(-r.polynomial->coeff(0));
  return r;
}

SolveResult solve(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::A: return solve_A(spec.rank);
    case Family::B: return solve_B(spec.rank);
    case Family::C: return solve_C(spec.rank);
    case Family::D: return solve_D(spec.rank);
    case Family::G2: return solve_G2();
  }
  throw contract_violation("unknown family");
}

std::map<std::string, double> g2_certificate_suite(const SolveResult& result) {
  if (result.spec.family != Family::G2 || !result.polynomial ||
      result.cosines.size() != 3)
    throw contract_violation("g2_certificate_suite requires a solve_G2 result");

  std::map<std::string, double> report;
  const Rational A = -result.polynomial->coeff(2);
  const Rational B = result.polynomial->coeff(1);

  // A = B holds exactly at the rational level.
  report["ab_equality_residual"] = std::abs(to_double(A) - to_double(B));
  if (A != B) throw certificate_error("ab_equality", "A_sym != B_sym");

  // The sextic g equalizes at the three cosines.
  const double Ad = to_double(A), Bd = to_double(B);
  auto g = [&](double x) {
    double u = x - Ad / 3.0;
    return u * u * (-3.0 * x * x + 2.0 * Ad * x + Ad * Ad - 4.0 * Bd) * (1.0 - x * x);
  };
  double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
  for (double x : result.cosines) {
    gmin = std::min(gmin, g(x));
    gmax = std::max(gmax, g(x));
  }
  report["g_equalization_deviation"] = gmax - gmin;
  if (gmax - gmin > 1e-10)
    throw certificate_error("g_equalization", "g does not equalize at the cosines");

  // The cosine sum satisfies 5A^4 - 12A^3 - 54A^2 + 108A + 81 = 0, exactly.
  const RationalPolynomial quartic =
      RationalPolynomial::from_strings({"81", "108", "-54", "-12", "5"});
  Rational residual = quartic(A);
  report["quartic_residual"] = to_double(residual);
  if (residual != 0)
    throw certificate_error("quartic_membership", "A_sym does not satisfy the quartic");

  // Its full root set is {-3/5, -3, 3 (double)}: exact factorization.
  const RationalPolynomial factored =
      RationalPolynomial::from_strings({"3/5", "1"}) *   // x + 3/5
      RationalPolynomial::from_strings({"3", "1"}) *     // x + 3
      RationalPolynomial::from_strings({"-3", "1"}) *    // (x - 3)^2
      RationalPolynomial::from_strings({"-3", "1"}) * Rational(5);
  report["quartic_roots_match"] = (factored == quartic) ? 1.0 : 0.0;
  if (!(factored == quartic))
    throw certificate_error("quartic_factorization",
                            "quartic does not factor as 5(x+3/5)(x+3)(x-3)^2");

  // Stationarity of the arccos constraint: -1/sqrt(1-a^2) + 1/sqrt(1-b^2)
  // + 1/sqrt(1-c^2) = 0.
  const double a = result.cosines[0], b = result.cosines[1], c = result.cosines[2];
  const double stat = -1.0 / std::sqrt(1.0 - a * a) + 1.0 / std::sqrt(1.0 - b * b) +
                      1.0 / std::sqrt(1.0 - c * c);
  report["stationarity_residual"] = std::abs(stat);
  if (std::abs(stat) > 1e-10)
    throw certificate_error("stationarity", "inverse-sine stationarity identity failed");

  return report;
}

}  // namespace maxclass
