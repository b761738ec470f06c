#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "maxclass/closed_form.hpp"
#include "maxclass/optimizer.hpp"

namespace maxclass {

/// Closed-form vs optimizer comparison for one group.
struct AgreementReport {
  GroupSpec spec;
  int starts = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;

  double angle_deviation = 0.0;   // weyl_distance(closed-form, optimizer best)
  double gradient_norm = 0.0;     // |grad log V| at the closed-form angles
  int distinct_optima_count = 0;
  double best_log_volume = 0.0;
  double closed_form_log_volume = 0.0;
  double log_volume_gap = 0.0;
  std::map<std::string, double> extras;  // family-specific residuals

  SolveResult closed_form;
  OptimizerReport optimizer;

  bool agree() const {
    return angle_deviation <= tol && gradient_norm <= 1e-8 && distinct_optima_count == 1;
  }
};

AgreementReport verify_agreement(const GroupSpec& spec, int starts, std::uint64_t seed,
                                 double tol);

}  // namespace maxclass
