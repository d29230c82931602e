#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "skh/catalog.hpp"
#include "skh/f2_matrix.hpp"
#include "skh/graded_dims.hpp"
#include "skh/homology.hpp"
#include "skh/random_diagrams.hpp"

using namespace skh;

namespace {

// Reference rank by plain elimination on bools.
std::size_t naive_rank(std::vector<std::vector<bool>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] != m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank_f2(SparseF2Matrix(3, 3)) == 0);
  SparseF2Matrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.set(i, i);
  CHECK(rank_f2(id) == 4);
  SparseF2Matrix ones(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ones.set(i, j);
  CHECK(rank_f2(ones) == 1);
  CHECK(rank_f2(SparseF2Matrix(0, 5)) == 0);
  CHECK(rank_f2(SparseF2Matrix(5, 0)) == 0);
}

TEST_CASE("flip is addition mod 2") {
  SparseF2Matrix m(2, 70);
  m.flip(1, 65);
  CHECK(m.get(1, 65));
  m.flip(1, 65);
  CHECK_FALSE(m.get(1, 65));
  m.set(0, 3);
  m.set(0, 3);
  CHECK(m.nonzeros() == 1);
}

TEST_CASE("rank agrees with naive elimination and ignores permutations") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = rng() % 40 + 1, c = rng() % 140 + 1;
    const int density = static_cast<int>(rng() % 5) + 1;
    SparseF2Matrix m(r, c);
    std::vector<std::vector<bool>> ref(r, std::vector<bool>(c, false));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (static_cast<int>(rng() % 20) < density) {
          m.set(i, j);
          ref[i][j] = true;
        }
      }
    }
    const std::size_t rank = rank_f2(m);
    CHECK(rank == naive_rank(ref));
    const SparseF2Matrix copy = m;
    (void)rank_f2(m);
    CHECK(m == copy);

    std::vector<std::size_t> pr(r), pc(c);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    SparseF2Matrix p(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (m.get(i, j)) p.set(pr[i], pc[j]);
    CHECK(rank_f2(p) == rank);
  }
}

TEST_CASE("graded dims bookkeeping") {
  GradedDims g(true);
  g.add({0, 1, 1}, 2);
  g.add({0, 1, -1}, 1);
  g.add({1, 3, 1}, 0);
  CHECK(g.total() == 3);
  CHECK(g.table().size() == 2);
  CHECK(g.at(0, 1, 1) == 2);
  CHECK(g.at(5, 5, 5) == 0);
  CHECK(g.slice_k(1).at(0, 1) == 2);
  CHECK(g.collapse_k().at(0, 1) == 3);
  CHECK_THROWS_AS(g.add({0, 0, std::nullopt}, 1), std::invalid_argument);

  GradedDims a(false), b(false);
  a.add({0, 1, std::nullopt}, 1);
  a.add({1, 3, std::nullopt}, 1);
  b.add({0, 0, std::nullopt}, 2);
  const GradedDims c = convolve(a, b);
  CHECK(c.total() == 4);
  CHECK(c.at(1, 3) == 2);
  CHECK(find_shift(a, a.shifted(2, -4)) == std::pair{2, -4});
  CHECK_FALSE(find_shift(a, c).has_value());
  CHECK(a.euler_by_j() == std::map<int, long long>{{1, 1}, {3, -1}});
}

TEST_CASE("homology bookkeeping on random tangles") {
  Rng rng(8);
  for (int n = 0; n < 80; ++n) {
    const TangleDiagram d = n % 3 ? random_tangle(rng, 7) : random_braid(rng, 4, 8);
    const GradedComplex c = build_differential(d);
    const GradedDims h = homology_dims(c);
    const GradedDims chains = chain_dims(c);
    CHECK(h.euler_by_j() == chains.euler_by_j());
    CHECK(h.total() % 2 == chains.total() % 2);
    for (const auto& [key, dim] : h.table()) CHECK(dim <= chains.table().at(key));
    CHECK(homology_dims(c, 4) == h);
  }
}

TEST_CASE("identity and circle") {
  const GradedDims id = homology_dims(build_differential(catalog::identity(2)));
  CHECK(id.total() == 1);
  CHECK(id.at(0, 0) == 1);
  CHECK(homology_dims(build_differential(catalog::cupcap_unknot())).total() == 2);
}
