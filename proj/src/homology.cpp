#include "skh/homology.hpp"

#include <vector>

#include "skh/f2_matrix.hpp"
#include "skh/parallel.hpp"

namespace skh {

GradedDims homology_dims(const GradedComplex& c, int threads) {
  const bool triply = c.mode() == ComplexMode::AnnularAssociatedGraded;
  std::vector<GradingKey> keys;
  for (const auto& [key, gens] : c.buckets()) keys.push_back(key);

  // rank of the block leaving each bucket
  std::vector<std::size_t> out_rank(keys.size(), 0);
  parallel_chunks(keys.size(), keys.size(), threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t b = lo; b < hi; ++b) out_rank[b] = rank_f2(c.boundary_block(keys[b]));
  });

  GradedDims out(triply);
  for (std::size_t b = 0; b < keys.size(); ++b) {
    GradingKey below = keys[b];
    below.i -= 1;
    std::size_t in_rank = 0;
    auto it = c.buckets().find(below);
    if (it != c.buckets().end()) in_rank = out_rank[static_cast<std::size_t>(std::distance(c.buckets().begin(), it))];
    const std::size_t n = c.buckets().at(keys[b]).size();
    out.add(keys[b], n - out_rank[b] - in_rank);
  }
  return out;
}

GradedDims chain_dims(const GradedComplex& c) {
  GradedDims out(c.mode() == ComplexMode::AnnularAssociatedGraded);
  for (const auto& [key, gens] : c.buckets()) out.add(key, gens.size());
  return out;
}

}  // namespace skh
