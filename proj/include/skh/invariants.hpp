#pragma once

#include <optional>
#include <string>
#include <utility>

#include "skh/complex.hpp"
#include "skh/diagram.hpp"
#include "skh/graded_dims.hpp"

namespace skh {

/// Bigraded SKh of a balanced tangle.
GradedDims skh_tangle(const TangleDiagram& d, const BuildOptions& opts = {});

/// Triply graded SKh of an annular link (homology of the associated graded complex).
GradedDims skh_annular(const AnnularDiagram& d, const BuildOptions& opts = {});

/// Homology of the full filtered complex, i.e. Khovanov homology of the link with X forgotten.
GradedDims kh_total(const AnnularDiagram& d, const BuildOptions& opts = {});

/// Reduced Khovanov homology of the closure of a (1,1)-tangle.
/// Throws IncompatibleInput unless the diagram has one endpoint at each end.
GradedDims khr_link(const TangleDiagram& d, const BuildOptions& opts = {});

struct AnnularComputation {
  GradedDims skh;    // triply graded
  GradedDims total;  // bigraded
  FiltrationStats filtration;
};

/// Both annular homologies from a single complex build.
AnnularComputation compute_annular(const AnnularDiagram& d, const BuildOptions& opts = {});

struct BraidVerdict {
  bool is_braid_homology = false;
  std::size_t total_dim = 0;
  GradedDims graded;
};

BraidVerdict detect_braid(const TangleDiagram& d, const BuildOptions& opts = {});

struct ParityReport {
  bool passed = false;
  std::size_t total = 0;
  bool string_link = false;
  std::string detail;
};

ParityReport parity_check(const TangleDiagram& d, const BuildOptions& opts = {});

/// The (n,n)-tangle made of the (1,1)-tangle k2 on the first strand and n-1
/// straight strands to its right.
TangleDiagram knot_star(const TangleDiagram& k2, int n);

/// Ties the knot cut open as k2 into the first top strand of t1.
TangleDiagram connected_sum(const TangleDiagram& t1, const TangleDiagram& k2);

struct TensorReport {
  bool passed = false;
  bool totals_equal = false;
  std::optional<std::pair<int, int>> shift;  // (di, dj) with lhs = convolution shifted
  GradedDims lhs;  // SKh(T1 # K)
  GradedDims rhs;  // SKh(T1) * Kh_r(K)
  std::string detail;
};

TensorReport tensor_check(const TangleDiagram& t1, const TangleDiagram& k2, const BuildOptions& opts = {});

struct CutReport {
  bool passed = false;
  bool generators_match = false;  // bijection between tangle generators and the k = m level
  bool matrices_match = false;
  bool homology_match = false;
  int m = 0;
  int j_shift = 0;  // the k = m level sits at j + m relative to the tangle complex
  GradedDims annular_top;  // k = m slice of SKh(L), regraded to j - m
  GradedDims tangle;       // SKh(T)
  FiltrationStats filtration;
  std::string detail;
};

CutReport cut_check(const AnnularDiagram& d, const BuildOptions& opts = {});

struct SpectralReport {
  bool passed = false;
  bool bound_holds = false;
  bool euler_match = false;
  GradedDims collapsed;  // SKh summed over k
  GradedDims total;      // homology of the full complex
  FiltrationStats filtration;
  std::string detail;
};

SpectralReport spectral_bound_check(const AnnularDiagram& d, const BuildOptions& opts = {});

std::string format_dims(const GradedDims& g);

}  // namespace skh
