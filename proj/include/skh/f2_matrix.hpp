#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace skh {

/// Matrix over F2 stored as packed 64-bit rows. Entries are a set of
/// positions; `flip` adds 1 mod 2.
class SparseF2Matrix {
public:
  SparseF2Matrix() = default;
  SparseF2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

  std::size_t nonzeros() const;
  bool operator==(const SparseF2Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over F2. Rows are eliminated sparsest first so that pivots introduce
/// as little fill as possible.
std::size_t rank_f2(const SparseF2Matrix& m);

}  // namespace skh
