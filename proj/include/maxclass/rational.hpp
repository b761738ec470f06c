#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "maxclass/errors.hpp"

namespace maxclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats as "p/q" in lowest terms, plain "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw contract_violation("cannot parse rational '" + s + "'");
  }
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace maxclass
