#pragma once

#include <map>
#include <string>
#include <vector>

#include "maxclass/closed_form.hpp"
#include "maxclass/optimizer.hpp"

namespace maxclass {

/// Serialized answer record, schema version "1". Angles, cosines and
/// log_volume are decimal strings with 17 significant digits (lossless for
/// doubles); polynomial coefficients are exact rational strings in ascending
/// degree.
struct OutputRecord {
  std::string schema_version = "1";
  std::string group;
  int rank = 0;
  std::vector<std::string> angles;
  std::vector<std::string> cosines;
  std::vector<std::string> polynomial;
  std::string log_volume;
  std::map<std::string, std::string> certificates;
  std::string provenance;  // "closed_form" | "optimizer"

  bool operator==(const OutputRecord& o) const = default;
};

/// %.17g formatting; round-trips every finite double exactly.
std::string format_double(double v);
double parse_double(const std::string& s);

OutputRecord make_record(const SolveResult& result);
OutputRecord make_record(const GroupSpec& spec, const OptimizerReport& report);

std::string to_json(const OutputRecord& record);
OutputRecord record_from_json(const std::string& text);

/// Single-record CSV: a header row naming each column, then one data row.
std::string to_csv(const OutputRecord& record);

}  // namespace maxclass
