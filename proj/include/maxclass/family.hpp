#pragma once

#include <string>

#include "maxclass/errors.hpp"

namespace maxclass {

/// The five supported families of compact simple Lie groups.
///   A: SU(n), B: SO(2n+1), C: Sp(2n), D: SO(2n), G2: the rank-2 exceptional group.
enum class Family { A, B, C, D, G2 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

inline Family family_from_name(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2") return Family::G2;
  throw contract_violation("unknown family '" + s + "' (expected A, B, C, D or G2)");
}

}  // namespace maxclass
