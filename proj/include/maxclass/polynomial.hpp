#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxclass/family.hpp"
#include "maxclass/rational.hpp"

namespace maxclass {

/// Polynomial with exact rational coefficients, stored in ascending degree
/// with no trailing zeros. The zero polynomial has an empty coefficient
/// vector and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending_coefficients);

  static RationalPolynomial from_strings(const std::vector<std::string>& ascending);
  /// c * x^degree
  static RationalPolynomial monomial(int degree, const Rational& c = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const;
  /// Coefficient of x^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  RationalPolynomial derivative() const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rational& s) const;
  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Euclidean division: returns (quotient, remainder) with deg r < deg d.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const;
  /// Quotient when the division is exact, nullopt otherwise.
  std::optional<RationalPolynomial> exact_divide(const RationalPolynomial& d) const;

  std::vector<std::string> coefficient_strings() const;
  /// Human-readable form, e.g. "x^3 - 3/5*x".
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Values (p(x), p'(x), ..., p^(order)(x)) by repeated Horner evaluation in
/// double precision.
std::vector<double> eval_and_derivatives(const RationalPolynomial& p, double x, int order);

/// All real roots of p in [-1, 1], ascending, each accurate to 1e-13.
///
/// Requires every root of p to be real, simple, and inside [-1, 1]; this is
/// checked, not assumed. Exact rational roots at the dyadic grid (notably 0
/// and +-1) are returned exactly. Isolation uses exact integer sign
/// evaluation at dyadic points; for degree <= 64 a Sturm chain additionally
/// certifies the total count and the simplicity of each bracketed root. For
/// larger degrees completeness is certified by locating degree-many strict
/// sign changes, which a degree-n polynomial cannot exceed.
///
/// Throws root_count_error (carrying the isolation intervals found) when the
/// full count cannot be reached, i.e. when the precondition is violated.
std::vector<double> real_roots_unit_interval(const RationalPolynomial& p);

/// prod_{i<k} |r_k - r_i| over a strictly increasing root list; the positive
/// square root of the discriminant of prod (x - r_i). Repeated roots give 0.
double sqrt_discriminant(const std::vector<double>& roots);

/// Modified square-root discriminant:
///   B: sqrt(prod (1 - r_i)) * sqrt_discriminant(r)
///   C: prod sqrt(1 - r_i^2) * sqrt_discriminant(r)
/// Degenerate inputs (a root at the excluded endpoint) return 0.
double modified_sqrt_discriminant(Family family, const std::vector<double>& roots);

}  // namespace maxclass
