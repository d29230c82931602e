#include "skh/random_diagrams.hpp"

#include <vector>

#include "skh/catalog.hpp"
#include "skh/invariants.hpp"

namespace skh {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

TangleDiagram random_braid(Rng& rng, int max_strands, int max_length) {
  const int n = uniform(rng, 2, std::max(2, max_strands));
  const int len = uniform(rng, 0, max_length);
  std::vector<int> word;
  for (int q = 0; q < len; ++q) {
    const int g = uniform(rng, 1, n - 1);
    word.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return catalog::braid(n, word);
}

TangleDiagram random_tangle(Rng& rng, int max_crossings, int max_bottom, int max_width) {
  const int n = uniform(rng, 0, max_bottom);
  const int target = uniform(rng, 0, max_crossings);
  max_width = std::max(max_width, n + 2);
  std::vector<MorseSlice> slices;
  int w = n, placed = 0;
  auto cup = [&] {
    slices.push_back({SliceKind::Cup, uniform(rng, 1, w + 1)});
    w += 2;
  };
  auto cap = [&] {
    slices.push_back({SliceKind::Cap, uniform(rng, 1, w - 1)});
    w -= 2;
  };
  while (placed < target) {
    const int roll = uniform(rng, 0, 9);
    if (w < 2 || (roll < 2 && w + 2 <= max_width)) {
      cup();
    } else if (roll < 4) {
      cap();
    } else {
      slices.push_back({uniform(rng, 0, 1) ? SliceKind::CrossLOver : SliceKind::CrossROver, uniform(rng, 1, w - 1)});
      ++placed;
    }
  }
  while (w > n) cap();
  while (w < n) cup();
  return TangleDiagram::make(n, std::move(slices));
}

TangleDiagram random_connected_sum(Rng& rng, int max_crossings, TangleDiagram* braid_out, TangleDiagram* knot) {
  const TangleDiagram t1 = random_braid(rng, 4, max_crossings);
  TangleDiagram k;
  switch (uniform(rng, 0, 2)) {
    case 0: k = catalog::unknot_cut(); break;
    case 1: k = catalog::trefoil_cut(); break;
    default: k = catalog::figure_eight_cut(); break;
  }
  if (braid_out) *braid_out = t1;
  if (knot) *knot = k;
  return connected_sum(t1, k);
}

}  // namespace skh
