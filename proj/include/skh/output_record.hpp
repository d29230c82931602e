#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "skh/graded_dims.hpp"

namespace skh {

struct OutputRecord {
  std::string invariant;
  std::string input_digest;
  GradedDims dims;
  std::map<std::string, bool> verdicts;
  std::optional<double> timing_ms;

  bool operator==(const OutputRecord&) const = default;
};

/// 64-bit FNV-1a of the input text, as 16 hex digits.
std::string input_digest(std::string_view text);

nlohmann::ordered_json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// Header line, then one row per grading: i, j[, k], dim.
std::string to_tsv(const OutputRecord& r);

}  // namespace skh
