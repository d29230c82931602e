#include "skh/graded_dims.hpp"

#include <stdexcept>

namespace skh {

std::string to_string(const GradingKey& g) {
  std::string s = "(" + std::to_string(g.i) + "," + std::to_string(g.j);
  if (g.k) s += "," + std::to_string(*g.k);
  return s + ")";
}

void GradedDims::add(const GradingKey& key, std::size_t dim) {
  if (key.k.has_value() != triply_graded_) throw std::invalid_argument("grading key arity does not match table");
  if (dim == 0) return;
  table_[key] += dim;
  total_ += dim;
}

std::size_t GradedDims::at(int i, int j) const {
  auto it = table_.find(GradingKey{i, j, std::nullopt});
  return it == table_.end() ? 0 : it->second;
}

std::size_t GradedDims::at(int i, int j, int k) const {
  auto it = table_.find(GradingKey{i, j, k});
  return it == table_.end() ? 0 : it->second;
}

GradedDims GradedDims::slice_k(int k) const {
  GradedDims out(false);
  for (const auto& [key, dim] : table_) {
    if (key.k == k) out.add({key.i, key.j, std::nullopt}, dim);
  }
  return out;
}

GradedDims GradedDims::collapse_k() const {
  GradedDims out(false);
  for (const auto& [key, dim] : table_) out.add({key.i, key.j, std::nullopt}, dim);
  return out;
}

GradedDims GradedDims::shifted(int di, int dj) const {
  GradedDims out(triply_graded_);
  for (const auto& [key, dim] : table_) out.add({key.i + di, key.j + dj, key.k}, dim);
  return out;
}

std::map<int, long long> GradedDims::euler_by_j() const {
  std::map<int, long long> out;
  for (const auto& [key, dim] : table_) {
    out[key.j] += (key.i % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GradedDims convolve(const GradedDims& a, const GradedDims& b) {
  if (a.triply_graded() || b.triply_graded()) throw std::invalid_argument("convolve expects bigraded tables");
  GradedDims out(false);
  for (const auto& [ka, da] : a.table()) {
    for (const auto& [kb, db] : b.table()) out.add({ka.i + kb.i, ka.j + kb.j, std::nullopt}, da * db);
  }
  return out;
}

std::optional<std::pair<int, int>> find_shift(const GradedDims& a, const GradedDims& b) {
  if (a.total() != b.total() || a.triply_graded() != b.triply_graded()) return std::nullopt;
  if (a.total() == 0) return std::pair{0, 0};
  const GradingKey& lo_a = a.table().begin()->first;
  const GradingKey& lo_b = b.table().begin()->first;
  const int di = lo_b.i - lo_a.i, dj = lo_b.j - lo_a.j;
  if (a.shifted(di, dj) == b) return std::pair{di, dj};
  return std::nullopt;
}

}  // namespace skh
