#pragma once

// The F2 chain complex of the cube of resolutions.
//
// A generator is a cube vertex I together with a subset S of the closed
// components of R_I: the wedge monomial of the classes [T] for T in S.
// A circle in S carries v-, a circle outside S carries v+. Subsets are stored
// as bitmasks over the closed-component order of the resolution.
//
// Gradings, with a = number of closed components and |I| the number of 1-bits:
//   i = |I| - n_-
//   j = (a - 2|S|) + |I| + n_+ - 2 n_-
//   k = #(essential circles outside S) - #(essential circles in S)

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "skh/diagram.hpp"
#include "skh/f2_matrix.hpp"
#include "skh/graded_dims.hpp"
#include "skh/resolution.hpp"

namespace skh {

enum class ComplexMode : std::uint8_t { Tangle, AnnularTotal, AnnularAssociatedGraded };

struct KhGenerator {
  std::uint64_t vertex = 0;
  std::uint64_t wedge = 0;
  bool operator==(const KhGenerator&) const = default;
  auto operator<=>(const KhGenerator&) const = default;
};

struct Grading {
  int i = 0;
  int j = 0;
  int k = 0;
  bool operator==(const Grading&) const = default;
};

struct BuildOptions {
  int max_crossings = 24;
  int threads = 1;
};

/// Bookkeeping for the annular filtration.
struct FiltrationStats {
  std::size_t entries = 0;         // nonzero entries of the full differential
  std::size_t k_preserving = 0;
  std::size_t k_decreasing = 0;
  std::size_t k_increasing = 0;    // must stay 0
  std::size_t dropped = 0;         // entries removed by associated_graded
  std::size_t dropped_not_decreasing = 0;  // must stay 0
};

class GradedComplex {
public:
  ComplexMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool has_differential() const noexcept { return !d_offsets_.empty(); }

  const std::vector<KhGenerator>& generators() const noexcept { return generators_; }
  const std::vector<Grading>& gradings() const noexcept { return gradings_; }
  const FiltrationStats& filtration() const noexcept { return stats_; }
  int cut_points() const noexcept { return cut_points_; }

  /// Non-backtracking cube vertices in increasing order, with their closed-component counts.
  const std::vector<std::uint64_t>& vertices() const noexcept { return vertices_; }
  const std::vector<int>& vertex_circles() const noexcept { return vertex_circles_; }

  /// Boundary of generator g as a sorted list of generator indices.
  std::span<const std::uint32_t> boundary(std::size_t g) const {
    return {d_targets_.data() + d_offsets_[g], d_offsets_[g + 1] - d_offsets_[g]};
  }

  /// Index of a generator, or -1.
  long long find(const KhGenerator& g) const;

  GradingKey bucket_key(std::size_t g) const;
  const std::map<GradingKey, std::vector<std::uint32_t>>& buckets() const noexcept { return buckets_; }

  /// The block of the differential from bucket `from` to the bucket with i
  /// raised by one. Rows index the source bucket, columns the target bucket.
  SparseF2Matrix boundary_block(const GradingKey& from) const;

  /// Count of generators whose boundary-of-boundary is nonzero.
  std::size_t square_defects() const;

private:
  friend class ComplexBuilder;
  friend GradedComplex associated_graded(const GradedComplex& c);
  void rebucket();

  ComplexMode mode_ = ComplexMode::Tangle;
  int cut_points_ = 0;
  std::vector<KhGenerator> generators_;
  std::vector<Grading> gradings_;
  std::vector<std::uint64_t> vertices_;
  std::vector<std::size_t> vertex_offset_;
  std::vector<int> vertex_circles_;
  std::vector<std::size_t> d_offsets_;
  std::vector<std::uint32_t> d_targets_;
  std::map<GradingKey, std::vector<std::uint32_t>> buckets_;
  std::vector<std::uint32_t> local_index_;
  FiltrationStats stats_;
};

/// Generators and gradings only (no differential). Tangle mode: vertices that
/// backtrack contribute nothing. Throws SizeCapError past max_crossings.
GradedComplex enumerate_generators(const TangleDiagram& d, const BuildOptions& opts = {});
GradedComplex enumerate_generators(const AnnularDiagram& d, const BuildOptions& opts = {});

/// Full complex with differential; Tangle mode for tangles, AnnularTotal for
/// annular diagrams. Throws InternalError if the differential does not square to zero.
GradedComplex build_differential(const TangleDiagram& d, const BuildOptions& opts = {});
GradedComplex build_differential(const AnnularDiagram& d, const BuildOptions& opts = {});

/// Keeps only the k-preserving part of an AnnularTotal differential.
GradedComplex associated_graded(const GradedComplex& c);

struct CubeEdge {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  SaddleType saddle;
};

/// Image of a generator under the edge map, as an F2 sum of target generators.
std::vector<KhGenerator> edge_map(const KhGenerator& g, const CubeEdge& edge);

/// Edge map on wedge bitmasks; writes up to two targets, returns how many.
int map_wedge(std::uint64_t wedge, const SaddleType& s, std::uint64_t out[2]);

}  // namespace skh
