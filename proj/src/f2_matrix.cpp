#include "skh/f2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace skh {

std::size_t SparseF2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t rank_f2(const SparseF2Matrix& m) {
  const std::size_t words = m.words_per_row();
  if (m.rows() == 0 || words == 0) return 0;

  std::vector<std::size_t> weight(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::uint64_t w : m.row(r)) weight[r] += static_cast<std::size_t>(std::popcount(w));
  }
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });

  // Pivot rows kept in echelon form keyed by their lowest set column.
  std::vector<std::vector<std::uint64_t>> pivots;
  std::vector<int> pivot_of_col(m.cols(), -1);
  std::vector<std::uint64_t> work(words);
  for (std::size_t r : order) {
    if (weight[r] == 0) continue;
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), work.begin());
    std::size_t w = 0;
    for (;;) {
      while (w < words && work[w] == 0) ++w;
      if (w == words) break;
      const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(work[w]));
      const int p = pivot_of_col[col];
      if (p < 0) {
        pivot_of_col[col] = static_cast<int>(pivots.size());
        pivots.push_back(work);
        break;
      }
      const auto& pr = pivots[static_cast<std::size_t>(p)];
      for (std::size_t k = w; k < words; ++k) work[k] ^= pr[k];
    }
  }
  return pivots.size();
}

}  // namespace skh
