#pragma once

#include <random>

#include "skh/diagram.hpp"

namespace skh {

using Rng = std::mt19937_64;

/// Braid word on 2..max_strands strands with 0..max_length letters.
TangleDiagram random_braid(Rng& rng, int max_strands = 5, int max_length = 12);

/// A random walk through slices, closed off so that the top width matches
/// the bottom. Mixes crossings with cups and caps, so closed circles and
/// turnbacks both show up.
TangleDiagram random_tangle(Rng& rng, int max_crossings = 8, int max_bottom = 3, int max_width = 6);

/// Braid with at most max_crossings letters joined with a random knot
/// from {unknot, trefoil, figure-eight}; `knot` receives the cut knot.
TangleDiagram random_connected_sum(Rng& rng, int max_crossings, TangleDiagram* braid_out, TangleDiagram* knot);

}  // namespace skh
