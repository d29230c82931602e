#pragma once

// Local isotopy moves on Morse presentations. Every move fixes the boundary
// and changes only a few consecutive slices.

#include <cstddef>
#include <string>

#include "skh/diagram.hpp"

namespace skh {

enum class MoveKind : std::uint8_t {
  R1Insert,      // kink on the strand at `pos`, inserted before slice `index`
  R1Remove,      // remove the kink occupying slices index..index+2
  R2Insert,      // crossing pair on strands pos, pos+1 before slice `index`
  R2Remove,      // remove the cancelling pair at slices index, index+1
  R3,            // braid-relation slide on slices index..index+2
  ZigzagInsert,  // cup/cap birth on the strand at `pos` before slice `index`
  ZigzagRemove,  // cup/cap death at slices index, index+1
  Commute,       // swap slices index and index+1 acting on disjoint strands
};

struct MorseMove {
  MoveKind kind = MoveKind::Commute;
  std::size_t index = 0;
  int pos = 1;
  /// Crossing type of the first inserted crossing (R1Insert, R2Insert).
  SliceKind crossing = SliceKind::CrossLOver;
  /// R1Insert / ZigzagInsert: put the loop on the left of the strand.
  /// Commute of a cap followed by a cup in the same gap: the cup goes left.
  bool left = false;
};

/// Applies the move; throws MoveError when it is not legal at that location.
TangleDiagram apply_move(const TangleDiagram& d, const MorseMove& m);

/// The move that undoes `m`, to be applied to apply_move(d, m).
MorseMove inverse_move(const TangleDiagram& d, const MorseMove& m);

std::string describe(const MorseMove& m);

}  // namespace skh
