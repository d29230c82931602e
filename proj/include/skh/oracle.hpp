#pragma once

// Brute-force reference computation, written against the definitions and
// not against the resolution/complex code. Nothing here is tuned.

#include <cstdint>
#include <string>
#include <vector>

#include "skh/diagram.hpp"
#include "skh/graded_dims.hpp"

namespace skh::oracle {

enum class Mode : std::uint8_t { Tangle, AnnularAssociatedGraded, AnnularTotal };

struct DenseGenerator {
  std::string vertex;  // one '0'/'1' per crossing, slice order
  std::string labels;  // one '+'/'-' per closed circle, circles ordered by smallest node
  int i = 0, j = 0, k = 0;
};

struct DenseComplex {
  Mode mode = Mode::Tangle;
  std::vector<DenseGenerator> generators;
  /// boundary[g] = generators appearing in d(g) with coefficient 1
  std::vector<std::vector<int>> boundary;
  bool squares_to_zero() const;
};

constexpr int kMaxCrossings = 10;

/// Throws SizeCapError above kMaxCrossings.
DenseComplex build(const TangleDiagram& d, Mode mode);

GradedDims homology(const DenseComplex& c);

/// Tangle diagrams get the tangle theory, annular diagrams the associated graded one.
GradedDims oracle_homology(const TangleDiagram& d);
GradedDims oracle_homology(const AnnularDiagram& d);
/// Homology of the full annular complex (the X basepoint forgotten).
GradedDims oracle_total_homology(const AnnularDiagram& d);

}  // namespace skh::oracle
