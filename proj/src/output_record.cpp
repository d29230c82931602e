#include "skh/output_record.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace skh {

std::string input_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["invariant"] = r.invariant;
  j["input_digest"] = r.input_digest;
  j["triply_graded"] = r.dims.triply_graded();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, dim] : r.dims.table()) {
    nlohmann::ordered_json row{{"i", key.i}, {"j", key.j}};
    if (key.k) row["k"] = *key.k;
    row["dim"] = dim;
    rows.push_back(std::move(row));
  }
  j["gradings"] = std::move(rows);
  j["total"] = r.dims.total();
  j["verdicts"] = r.verdicts;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  OutputRecord r;
  r.invariant = j.at("invariant").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  bool triply = j.value("triply_graded", false);
  for (const auto& row : j.at("gradings")) triply = triply || row.contains("k");
  r.dims = GradedDims(triply);
  for (const auto& row : j.at("gradings")) {
    GradingKey key{row.at("i").get<int>(), row.at("j").get<int>(), std::nullopt};
    if (row.contains("k")) key.k = row.at("k").get<int>();
    r.dims.add(key, row.at("dim").get<std::size_t>());
  }
  if (r.dims.total() != j.at("total").get<std::size_t>()) throw std::invalid_argument("total does not match gradings");
  if (j.contains("verdicts")) r.verdicts = j.at("verdicts").get<std::map<std::string, bool>>();
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string to_tsv(const OutputRecord& r) {
  const bool k = r.dims.triply_graded();
  std::string out = k ? "i\tj\tk\tdim\n" : "i\tj\tdim\n";
  for (const auto& [key, dim] : r.dims.table()) {
    out += std::to_string(key.i) + '\t' + std::to_string(key.j) + '\t';
    if (k) out += std::to_string(*key.k) + '\t';
    out += std::to_string(dim) + '\n';
  }
  return out;
}

}  // namespace skh
