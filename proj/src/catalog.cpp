#include "skh/catalog.hpp"

#include <cstdlib>

#include "skh/error.hpp"

namespace skh::catalog {

TangleDiagram identity(int n) { return TangleDiagram::make(n, {}); }

TangleDiagram braid(int n, const std::vector<int>& word) {
  std::vector<MorseSlice> slices;
  for (int g : word) {
    if (g == 0 || std::abs(g) >= n) throw DiagramError("braid generator out of range: " + std::to_string(g));
    slices.push_back({g > 0 ? SliceKind::CrossLOver : SliceKind::CrossROver, std::abs(g)});
  }
  return TangleDiagram::make(n, std::move(slices));
}

TangleDiagram unknot_cut() { return identity(1); }

TangleDiagram trefoil_cut() { return parse_tangle("strands 1\nCUP 2\nX+ 1\nX+ 1\nX+ 1\nCAP 2\n"); }

TangleDiagram figure_eight_cut() {
  return parse_tangle("strands 1\nCUP 2\nCUP 3\nX+ 1\nX- 2\nX+ 1\nX- 2\nCAP 3\nCAP 2\n");
}

TangleDiagram turnback() { return parse_tangle("strands 2\nCAP 1\nCUP 1\n"); }

TangleDiagram cupcap_unknot() { return parse_tangle("strands 0\nCUP 1\nCAP 1\n"); }

}  // namespace skh::catalog
