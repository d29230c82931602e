#pragma once

#include "skh/complex.hpp"
#include "skh/graded_dims.hpp"

namespace skh {

/// Homology of a complex, bucket by bucket:
///   dim H(b) = #gens(b) - rank(d out of b) - rank(d into b).
/// Tangle and AnnularTotal complexes give bigraded tables, the associated
/// graded complex a triply graded one.
GradedDims homology_dims(const GradedComplex& c, int threads = 1);

/// Generator counts per bucket (the chain-level Euler characteristic source).
GradedDims chain_dims(const GradedComplex& c);

}  // namespace skh
