#pragma once

// Complete resolutions of a diagram and the saddle between two adjacent
// cube vertices.
//
// Smoothing convention: for an X+ crossing, bit 0 is the vertical smoothing
// | | and bit 1 the turnback smoothing (cup over cap); for X- the roles swap.
// Bit c of an assignment belongs to the c-th crossing in slice order.

#include <cstdint>
#include <vector>

#include "skh/diagram.hpp"

namespace skh {

enum class ResolutionMode : std::uint8_t { Tangle, Annular };

enum class ComponentTag : std::uint8_t {
  ClosedTrivial,
  ClosedEssential,  // annular mode only: winds once around the annulus
  ArcVertical,
  ArcBottom,
  ArcTop,
};

struct ResolvedComponent {
  ComponentTag tag = ComponentTag::ClosedTrivial;
  int rep_edge = -1;      // smallest segment id on the component
  int bottom_ends = 0;
  int top_ends = 0;       // in annular mode: number of passes through the cut
  int closed_index = -1;  // position among closed components, -1 for arcs

  bool closed() const noexcept {
    return tag == ComponentTag::ClosedTrivial || tag == ComponentTag::ClosedEssential;
  }
};

struct Resolution {
  std::uint64_t assignment = 0;
  ResolutionMode mode = ResolutionMode::Tangle;
  std::vector<ResolvedComponent> components;  // ordered by rep_edge
  std::vector<int> edge_component;            // component of each segment
  std::vector<int> closed;                    // component index of each closed component
  int a = 0;  // closed components
  int b = 0;  // arcs
  int essential = 0;
  std::uint64_t essential_mask = 0;  // over closed indices

  bool backtracks() const noexcept;
};

/// Resolves every crossing according to `assignment` (needs crossing_count <= 63).
Resolution resolve(const TangleDiagram& d, std::uint64_t assignment, ResolutionMode mode = ResolutionMode::Tangle);
inline Resolution resolve(const AnnularDiagram& d, std::uint64_t assignment) {
  return resolve(d.core(), assignment, ResolutionMode::Annular);
}
/// Same, with the assignment as an explicit bit list; throws on length mismatch.
Resolution resolve_bits(const TangleDiagram& d, const std::vector<int>& bits, ResolutionMode mode = ResolutionMode::Tangle);

/// True iff some arc has both of its ends on the top boundary.
bool backtracks(const Resolution& r);

enum class SaddleKind : std::uint8_t {
  ZeroMap,
  MergeClosedClosed,
  MergeClosedArc,
  SplitIntoClosedClosed,
  SplitIntoClosedArc,
};

/// Saddle between adjacent vertices I -> I'. Participant fields hold
/// component indices; the *_closed fields the matching closed indices (-1 for arcs).
struct SaddleType {
  SaddleKind kind = SaddleKind::ZeroMap;
  std::vector<int> source_participants;
  std::vector<int> target_participants;
  /// For each closed component of the source: its closed index in the target,
  /// or -1 when it takes part in the saddle.
  std::vector<int> closed_map;
  /// Merge: the closed source participants (one or two) and the merged target
  /// component's closed index. Split: the split source component's closed index
  /// and the two target closed indices (-1 entries for the arc).
  int src_i = -1, src_j = -1;
  int dst_i = -1, dst_j = -1;
};

/// Classifies the edge along crossing `crossing`, where `dst` is `src` with that
/// bit raised from 0 to 1.
SaddleType classify_saddle(const TangleDiagram& d, const Resolution& src, const Resolution& dst, int crossing);

/// Returns the edge I -> I'; throws std::invalid_argument unless I' is an immediate successor.
SaddleType saddle_classify(const TangleDiagram& d, std::uint64_t from, std::uint64_t to,
                           ResolutionMode mode = ResolutionMode::Tangle);

}  // namespace skh
