#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace skh {

/// Homological degree i, quantum degree j and, for annular tables, the annular degree k.
struct GradingKey {
  int i = 0;
  int j = 0;
  std::optional<int> k;

  auto operator<=>(const GradingKey&) const = default;
  bool operator==(const GradingKey&) const = default;
};

std::string to_string(const GradingKey& g);

/// Table of dimensions per multigrading. Absent keys have dimension 0 and
/// zero entries are never stored.
class GradedDims {
public:
  GradedDims() = default;
  explicit GradedDims(bool triply_graded) : triply_graded_(triply_graded) {}

  bool triply_graded() const noexcept { return triply_graded_; }
  const std::map<GradingKey, std::size_t>& table() const noexcept { return table_; }
  std::size_t total() const noexcept { return total_; }

  void add(const GradingKey& key, std::size_t dim);
  std::size_t at(int i, int j) const;
  std::size_t at(int i, int j, int k) const;

  /// The bigraded table of the k-th annular summand.
  GradedDims slice_k(int k) const;
  /// Sum over k.
  GradedDims collapse_k() const;
  GradedDims shifted(int di, int dj) const;
  /// Sum over i of (-1)^i dim, for each j.
  std::map<int, long long> euler_by_j() const;

  bool operator==(const GradedDims& o) const { return triply_graded_ == o.triply_graded_ && table_ == o.table_; }

private:
  bool triply_graded_ = false;
  std::map<GradingKey, std::size_t> table_;
  std::size_t total_ = 0;
};

/// Graded tensor product of two bigraded tables: degrees add.
GradedDims convolve(const GradedDims& a, const GradedDims& b);

/// If `b` equals `a` shifted by some (di, dj), returns that shift.
std::optional<std::pair<int, int>> find_shift(const GradedDims& a, const GradedDims& b);

}  // namespace skh
