#include "maxclass/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace maxclass {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
  trim(coeffs_);
}

RationalPolynomial RationalPolynomial::from_strings(const std::vector<std::string>& ascending) {
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (const auto& s : ascending) c.push_back(parse_rational(s));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c) {
  if (degree < 0) throw contract_violation("monomial degree must be >= 0");
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

bool RationalPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

const Rational& RationalPolynomial::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[k];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * int(k);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
  if (s == 0) return {};
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= s;
  return RationalPolynomial(std::move(c));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& d) const {
  if (d.is_zero()) throw contract_violation("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = d.degree();
  const Rational& lead = d.coeffs_.back();
  if (degree() < dd) return {RationalPolynomial{}, *this};
  std::vector<Rational> quot(degree() - dd + 1, Rational(0));
  for (int k = degree(); k >= dd; --k) {
    Rational q = rem[k] / lead;
    if (q == 0) continue;
    quot[k - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.coeffs_[j];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

std::optional<RationalPolynomial> RationalPolynomial::exact_divide(
    const RationalPolynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::vector<std::string> RationalPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  return out;
}

std::string RationalPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) os << to_string(a);
    if (k > 0 && a != 1) os << "*";
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::vector<double> eval_and_derivatives(const RationalPolynomial& p, double x, int order) {
  if (order < 0 || order > p.degree() + 1)
    throw contract_violation("derivative order out of range");
  std::vector<double> out;
  out.reserve(order + 1);
  RationalPolynomial cur = p;
  for (int k = 0; k <= order; ++k) {
    out.push_back(cur(x));
    cur = cur.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Root isolation on [-1, 1].
//
// All sign decisions are exact. Coefficients are cleared to integers, and a
// dyadic point a/2^k is tested via the integer value of p(a/2^k) * 2^(k*n).

namespace {

// Dyadic rational num / 2^exp2, exp2 >= 0.
struct Dyadic {
  BigInt num;
  int exp2 = 0;

  double to_double() const {
    return num.template convert_to<double>() * std::ldexp(1.0, -exp2);
  }
};

bool operator<(const Dyadic& a, const Dyadic& b) {
  int k = std::max(a.exp2, b.exp2);
  return (a.num << (k - a.exp2)) < (b.num << (k - b.exp2));
}
bool operator==(const Dyadic& a, const Dyadic& b) {
  int k = std::max(a.exp2, b.exp2);
  return (a.num << (k - a.exp2)) == (b.num << (k - b.exp2));
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  int k = std::max(a.exp2, b.exp2);
  return Dyadic{(a.num << (k - a.exp2)) + (b.num << (k - b.exp2)), k + 1};
}

Dyadic round_to_dyadic(double x, int depth) {
  return Dyadic{BigInt(std::llround(std::ldexp(x, depth))), depth};
}

// Integer coefficients of p times the lcm of its denominators.
std::vector<BigInt> integerize(const RationalPolynomial& p) {
  BigInt lcm(1);
  for (const auto& c : p.coefficients()) {
    BigInt d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients())
    out.push_back(boost::multiprecision::numerator(c) *
                  (lcm / boost::multiprecision::denominator(c)));
  return out;
}

// Sign of sum c_m * (a/2^k)^m, exactly.
int sign_at(const std::vector<BigInt>& c, const Dyadic& x) {
  const int n = static_cast<int>(c.size()) - 1;
  BigInt acc = c[n];
  for (int m = n - 1; m >= 0; --m) {
    acc = acc * x.num + (c[m] << (x.exp2 * (n - m)));
  }
  return acc.sign();
}

// Classical Sturm chain (used for degree <= 64 to certify counts).
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
    if (rem.is_zero()) break;  // nontrivial gcd: p not squarefree
    chain.push_back(rem * Rational(-1));
  }
  return chain;
}

int sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  int variations = 0, last = 0;
  for (const auto& q : chain) {
    Rational v = q(x);
    int s = v == 0 ? 0 : (v < 0 ? -1 : 1);
    if (s != 0) {
      if (last != 0 && s != last) ++variations;
      last = s;
    }
  }
  return variations;
}

Rational dyadic_to_rational(const Dyadic& x) {
  return Rational(x.num, BigInt(1) << x.exp2);
}

// Number of distinct real roots in the open interval (a, b); requires
// p(a) != 0 and p(b) != 0.
int sturm_count(const std::vector<RationalPolynomial>& chain, const Rational& a,
                const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

struct Bracket {
  Dyadic lo, hi;   // sign(lo) * sign(hi) < 0, or lo == hi for an exact root
  bool exact = false;
};

constexpr int kSturmDegreeCap = 64;
constexpr int kTargetExp2 = 47;  // final bracket width 2^-47 < 1e-13

}  // namespace

std::vector<double> real_roots_unit_interval(const RationalPolynomial& p) {
  if (p.is_zero()) throw contract_violation("cannot isolate roots of the zero polynomial");
  if (p.degree() == 0) return {};

  // Split off exact roots at the endpoints (at most one each for a simple-root
  // input; a second factor means the precondition failed and the count check
  // below reports it).
  RationalPolynomial q = p;
  std::vector<double> endpoint_roots;
  if (q(Rational(-1)) == 0) {
    q = *q.exact_divide(RationalPolynomial::from_strings({"1", "1"}));  // x + 1
    endpoint_roots.push_back(-1.0);
  }
  if (!q.is_zero() && q.degree() > 0 && q(Rational(1)) == 0) {
    q = *q.exact_divide(RationalPolynomial::from_strings({"-1", "1"}));  // x - 1
    endpoint_roots.push_back(1.0);
  }

  const int n = q.degree();
  const int total = p.degree();
  std::vector<double> roots = endpoint_roots;

  std::vector<Bracket> brackets;
  if (n > 0) {
    const std::vector<BigInt> ic = integerize(q);

    // Sturm certificate for the interior polynomial (small degrees).
    std::vector<RationalPolynomial> chain;
    if (total <= kSturmDegreeCap) {
      chain = sturm_chain(q);
      if (q(Rational(-1)) == 0 || q(Rational(1)) == 0 ||
          sturm_count(chain, Rational(-1), Rational(1)) != n) {
        throw root_count_error(
            "Sturm count in [-1,1] does not match the degree; roots are not "
            "all real, simple and inside the interval",
            {});
      }
    }

    // Adaptive dyadic sweep on a cosine-spaced grid (matches the clustering
    // of the target root sets near the endpoints).
    for (int density = std::max(32, 4 * n);; density *= 2) {
      brackets.clear();
      const int depth = 2 * static_cast<int>(std::ceil(std::log2(density))) + 3;
      std::vector<Dyadic> grid;
      grid.push_back(Dyadic{BigInt(-1) << depth, depth});
      for (int j = 1; j < density; ++j) {
        Dyadic g = round_to_dyadic(-std::cos(M_PI * j / density), depth);
        if (grid.back() < g) grid.push_back(g);
      }
      grid.push_back(Dyadic{BigInt(1) << depth, depth});

      int prev_sign = 0;
      Dyadic prev = grid.front();
      for (const auto& g : grid) {
        int s = sign_at(ic, g);
        if (s == 0) {
          brackets.push_back(Bracket{g, g, true});
        } else {
          if (prev_sign != 0 && s != prev_sign)
            brackets.push_back(Bracket{prev, g, false});
          prev_sign = s;
          prev = g;
        }
      }
      if (static_cast<int>(brackets.size()) == n) break;
      if (density > 64 * std::max(32, 4 * n)) {
        std::vector<std::pair<double, double>> found;
        for (const auto& b : brackets)
          found.emplace_back(b.lo.to_double(), b.hi.to_double());
        throw root_count_error(
            "isolated " + std::to_string(brackets.size()) + " of " + std::to_string(n) +
            " interior roots; input violates the real-simple-roots precondition",
            found);
      }
    }

    // Per-bracket Sturm certificate: exactly one root in each.
    if (!chain.empty()) {
      for (const auto& b : brackets) {
        if (b.exact) continue;
        if (sturm_count(chain, dyadic_to_rational(b.lo), dyadic_to_rational(b.hi)) != 1)
          throw root_count_error("bracket does not isolate a single root", {});
      }
    }

    // Exact bisection to width 2^-47 (< 1e-13 of slack on the midpoint).
    const double target = std::ldexp(1.0, -kTargetExp2);
    for (auto& b : brackets) {
      if (!b.exact) {
        int slo = sign_at(ic, b.lo);
        while (b.hi.to_double() - b.lo.to_double() > target) {
          Dyadic mid = midpoint(b.lo, b.hi);
          int sm = sign_at(ic, mid);
          if (sm == 0) {  // landed exactly on the root
            b.lo = b.hi = mid;
            b.exact = true;
            break;
          }
          if (sm == slo) b.lo = mid; else b.hi = mid;
        }
      }
      roots.push_back(b.exact ? b.lo.to_double()
                              : 0.5 * (b.lo.to_double() + b.hi.to_double()));
    }
  }

  std::sort(roots.begin(), roots.end());
  if (static_cast<int>(roots.size()) != total)
    throw root_count_error("root count mismatch after refinement", {});
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (!(roots[i] < roots[i + 1]))
      throw root_count_error("roots are not strictly increasing", {});
  return roots;
}

double sqrt_discriminant(const std::vector<double>& roots) {
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (roots[i] > roots[i + 1])
      throw contract_violation("sqrt_discriminant requires ascending roots");
  double d = 1.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = i + 1; k < roots.size(); ++k) d *= std::abs(roots[k] - roots[i]);
  return d;
}

double modified_sqrt_discriminant(Family family, const std::vector<double>& roots) {
  if (family != Family::B && family != Family::C)
    throw contract_violation("modified discriminant is defined for families B and C only");
  double w = 1.0;
  for (double r : roots) {
    if (family == Family::B) {
      double f = 1.0 - r;
      if (f <= 0.0) return 0.0;
      w *= std::sqrt(f);
    } else {
      double f = 1.0 - r * r;
      if (f <= 0.0) return 0.0;
      w *= std::sqrt(f);
    }
  }
  return w * sqrt_discriminant(roots);
}

}  // namespace maxclass
