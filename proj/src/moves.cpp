#include "skh/moves.hpp"

#include <optional>

#include "skh/error.hpp"

namespace skh {

namespace {

using Slices = std::vector<MorseSlice>;

MorseSlice cross(SliceKind k, int pos) { return {k, pos}; }
MorseSlice cup(int pos) { return {SliceKind::Cup, pos}; }
MorseSlice cap(int pos) { return {SliceKind::Cap, pos}; }

SliceKind opposite(SliceKind k) {
  return k == SliceKind::CrossLOver ? SliceKind::CrossROver : SliceKind::CrossLOver;
}

// +1 for X+, -1 for X-.
int exponent(const MorseSlice& s) { return s.kind == SliceKind::CrossLOver ? 1 : -1; }
SliceKind from_exponent(int e) { return e > 0 ? SliceKind::CrossLOver : SliceKind::CrossROver; }

// Half-open strand intervals occupied by a slice below and above it, 0-based.
struct Span {
  int lo, hi;
  bool empty() const { return lo == hi; }
};
Span below(const MorseSlice& s) {
  const int a = s.pos - 1;
  return s.kind == SliceKind::Cup ? Span{a, a} : Span{a, a + 2};
}
Span above(const MorseSlice& s) {
  const int a = s.pos - 1;
  return s.kind == SliceKind::Cap ? Span{a, a} : Span{a, a + 2};
}
int width_change(const MorseSlice& s) {
  return s.kind == SliceKind::Cup ? 2 : s.kind == SliceKind::Cap ? -2 : 0;
}

TangleDiagram rebuild(const TangleDiagram& d, Slices slices) {
  try {
    return TangleDiagram::make(d.n_bottom(), std::move(slices), d.bottom_up());
  } catch (const DiagramError& e) {
    throw MoveError(std::string("move produced an invalid diagram: ") + e.what());
  }
}

void require_index(const TangleDiagram& d, std::size_t index, std::size_t span, const char* what) {
  if (index + span > d.slices().size())
    throw MoveError(std::string(what) + ": slice index " + std::to_string(index) + " out of range");
}

// Whether the upper slice b ends up left of a when the two are swapped, or
// nothing if they share strands. A cap directly followed by a cup in the same
// gap can go either way; `tie_left` picks.
std::optional<bool> commute_side(const MorseSlice& a, const MorseSlice& b, bool tie_left) {
  const Span at = above(a), bb = below(b);
  if (at.empty() && bb.empty() && at.lo == bb.lo) return tie_left;
  if (bb.hi <= at.lo) return true;
  if (bb.lo >= at.hi) return false;
  return std::nullopt;
}

bool r1_pattern(const Slices& s, std::size_t i) {
  if (i + 3 > s.size()) return false;
  const MorseSlice &a = s[i], &b = s[i + 1], &c = s[i + 2];
  if (a.kind != SliceKind::Cup || !b.is_crossing() || c.kind != SliceKind::Cap) return false;
  // right kink: CUP p+1, X p, CAP p+1; left kink: CUP p, X p+1, CAP p
  const bool right = a.pos == b.pos + 1 && c.pos == b.pos + 1;
  const bool left = b.pos == a.pos + 1 && c.pos == a.pos;
  return right || left;
}

bool zigzag_pattern(const Slices& s, std::size_t i) {
  if (i + 2 > s.size()) return false;
  const MorseSlice &a = s[i], &b = s[i + 1];
  if (a.kind != SliceKind::Cup || b.kind != SliceKind::Cap) return false;
  return a.pos == b.pos + 1 || b.pos == a.pos + 1;
}

}  // namespace

TangleDiagram apply_move(const TangleDiagram& d, const MorseMove& m) {
  Slices s = d.slices();
  const auto& widths = d.skeleton().widths;
  auto insert_at = [&](std::size_t index, std::initializer_list<MorseSlice> items) {
    if (index > s.size()) throw MoveError("insertion index " + std::to_string(index) + " out of range");
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(index), items);
  };
  auto erase = [&](std::size_t index, std::size_t n) {
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(index), s.begin() + static_cast<std::ptrdiff_t>(index + n));
  };

  switch (m.kind) {
    case MoveKind::R1Insert: {
      if (m.index > s.size()) throw MoveError("R1: insertion index out of range");
      const int w = widths[m.index];
      if (m.pos < 1 || m.pos > w) throw MoveError("R1: no strand at position " + std::to_string(m.pos));
      if (m.left) insert_at(m.index, {cup(m.pos), cross(m.crossing, m.pos + 1), cap(m.pos)});
      else insert_at(m.index, {cup(m.pos + 1), cross(m.crossing, m.pos), cap(m.pos + 1)});
      break;
    }
    case MoveKind::R1Remove:
      require_index(d, m.index, 3, "R1 removal");
      if (!r1_pattern(s, m.index)) throw MoveError("R1 removal: slices do not form a kink");
      erase(m.index, 3);
      break;
    case MoveKind::R2Insert: {
      if (m.index > s.size()) throw MoveError("R2: insertion index out of range");
      const int w = widths[m.index];
      if (m.pos < 1 || m.pos + 1 > w) throw MoveError("R2: needs strands " + std::to_string(m.pos) + ", " + std::to_string(m.pos + 1));
      insert_at(m.index, {cross(m.crossing, m.pos), cross(opposite(m.crossing), m.pos)});
      break;
    }
    case MoveKind::R2Remove: {
      require_index(d, m.index, 2, "R2 removal");
      const MorseSlice &a = s[m.index], &b = s[m.index + 1];
      if (!a.is_crossing() || !b.is_crossing() || a.pos != b.pos || a.kind == b.kind)
        throw MoveError("R2 removal: slices are not a cancelling crossing pair");
      erase(m.index, 2);
      break;
    }
    case MoveKind::R3: {
      require_index(d, m.index, 3, "R3");
      const MorseSlice &a = s[m.index], &b = s[m.index + 1], &c = s[m.index + 2];
      if (!a.is_crossing() || !b.is_crossing() || !c.is_crossing()) throw MoveError("R3: needs three crossings");
      const int p = a.pos, q = b.pos;
      if (c.pos != p || (q != p + 1 && q != p - 1)) throw MoveError("R3: crossings are not in p, p+-1, p position");
      const int ea = exponent(a), eb = exponent(b), ec = exponent(c);
      Slices repl;
      if (ea == eb && eb == ec) {
        repl = {cross(from_exponent(ea), q), cross(from_exponent(ea), p), cross(from_exponent(ea), q)};
      } else if (ec == -ea) {
        // s_p^a s_q^b s_p^-a = s_q^-a s_p^b s_q^a
        repl = {cross(from_exponent(-ea), q), cross(from_exponent(eb), p), cross(from_exponent(ea), q)};
      } else {
        throw MoveError("R3: sign pattern admits no slide");
      }
      for (std::size_t k = 0; k < 3; ++k) s[m.index + k] = repl[k];
      break;
    }
    case MoveKind::ZigzagInsert: {
      if (m.index > s.size()) throw MoveError("zigzag: insertion index out of range");
      const int w = widths[m.index];
      if (m.pos < 1 || m.pos > w) throw MoveError("zigzag: no strand at position " + std::to_string(m.pos));
      if (m.left) insert_at(m.index, {cup(m.pos), cap(m.pos + 1)});
      else insert_at(m.index, {cup(m.pos + 1), cap(m.pos)});
      break;
    }
    case MoveKind::ZigzagRemove:
      require_index(d, m.index, 2, "zigzag removal");
      if (!zigzag_pattern(s, m.index)) throw MoveError("zigzag removal: slices are not a cup/cap cancelling pair");
      erase(m.index, 2);
      break;
    case MoveKind::Commute: {
      require_index(d, m.index, 2, "commute");
      MorseSlice a = s[m.index], b = s[m.index + 1];
      const auto side = commute_side(a, b, m.left);
      if (!side) throw MoveError("commute: slices act on overlapping strands");
      if (*side) a.pos += width_change(b);
      else b.pos -= width_change(a);
      s[m.index] = b;
      s[m.index + 1] = a;
      break;
    }
  }
  return rebuild(d, std::move(s));
}

MorseMove inverse_move(const TangleDiagram& d, const MorseMove& m) {
  MorseMove inv = m;
  switch (m.kind) {
    case MoveKind::R1Insert: inv.kind = MoveKind::R1Remove; break;
    case MoveKind::R1Remove: {
      const MorseSlice& a = d.slices().at(m.index);
      const MorseSlice& b = d.slices().at(m.index + 1);
      inv.kind = MoveKind::R1Insert;
      inv.crossing = b.kind;
      inv.left = b.pos == a.pos + 1;
      inv.pos = inv.left ? a.pos : b.pos;
      break;
    }
    case MoveKind::R2Insert: inv.kind = MoveKind::R2Remove; break;
    case MoveKind::R2Remove:
      inv.kind = MoveKind::R2Insert;
      inv.pos = d.slices().at(m.index).pos;
      inv.crossing = d.slices().at(m.index).kind;
      break;
    case MoveKind::ZigzagInsert: inv.kind = MoveKind::ZigzagRemove; break;
    case MoveKind::ZigzagRemove: {
      const MorseSlice& a = d.slices().at(m.index);
      const MorseSlice& b = d.slices().at(m.index + 1);
      inv.kind = MoveKind::ZigzagInsert;
      inv.left = b.pos == a.pos + 1;
      inv.pos = inv.left ? a.pos : b.pos;
      break;
    }
    case MoveKind::Commute: {
      const auto side = commute_side(d.slices().at(m.index), d.slices().at(m.index + 1), m.left);
      inv.left = side && !*side;
      break;
    }
    case MoveKind::R3: break;
  }
  return inv;
}

std::string describe(const MorseMove& m) {
  std::string name;
  switch (m.kind) {
    case MoveKind::R1Insert: name = "R1-insert"; break;
    case MoveKind::R1Remove: name = "R1-remove"; break;
    case MoveKind::R2Insert: name = "R2-insert"; break;
    case MoveKind::R2Remove: name = "R2-remove"; break;
    case MoveKind::R3: name = "R3"; break;
    case MoveKind::ZigzagInsert: name = "zigzag-insert"; break;
    case MoveKind::ZigzagRemove: name = "zigzag-remove"; break;
    case MoveKind::Commute: name = "commute"; break;
  }
  std::string out = name + " at slice " + std::to_string(m.index);
  if (m.kind == MoveKind::R1Insert || m.kind == MoveKind::R2Insert || m.kind == MoveKind::ZigzagInsert) {
    out += " pos " + std::to_string(m.pos);
    if (m.kind != MoveKind::ZigzagInsert) out += m.crossing == SliceKind::CrossLOver ? " X+" : " X-";
    if (m.kind != MoveKind::R2Insert) out += m.left ? " left" : " right";
  }
  return out;
}

}  // namespace skh
