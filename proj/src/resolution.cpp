#include "skh/resolution.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "skh/error.hpp"

namespace skh {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

bool vertical_smoothing(SliceKind kind, bool bit) { return (kind == SliceKind::CrossLOver) == !bit; }

void push_unique(std::vector<int>& v, int x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

bool Resolution::backtracks() const noexcept {
  return std::any_of(components.begin(), components.end(),
                     [](const ResolvedComponent& c) { return c.tag == ComponentTag::ArcTop; });
}

bool backtracks(const Resolution& r) { return r.backtracks(); }

Resolution resolve(const TangleDiagram& d, std::uint64_t assignment, ResolutionMode mode) {
  const Skeleton& sk = d.skeleton();
  if (sk.crossings.size() > 63) throw SizeCapError("resolve: more than 63 crossings");
  if (mode == ResolutionMode::Annular && !d.balanced()) throw DiagramError("annular resolution of an unbalanced tangle");

  std::vector<int> parent(sk.edge_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [l, r] : sk.cups) unite(parent, l, r);
  for (auto [l, r] : sk.caps) unite(parent, l, r);
  for (std::size_t c = 0; c < sk.crossings.size(); ++c) {
    const Crossing& x = sk.crossings[c];
    if (vertical_smoothing(x.kind, (assignment >> c) & 1U)) {
      unite(parent, x.bl, x.tl);
      unite(parent, x.br, x.tr);
    } else {
      unite(parent, x.bl, x.br);
      unite(parent, x.tl, x.tr);
    }
  }
  if (mode == ResolutionMode::Annular) {
    for (std::size_t q = 0; q < sk.top_edges.size(); ++q) unite(parent, sk.top_edges[q], sk.bottom_edges[q]);
  }

  Resolution r;
  r.assignment = assignment;
  r.mode = mode;
  r.edge_component.assign(sk.edge_count, -1);
  std::vector<int> slot(sk.edge_count, -1);
  for (int e = 0; e < sk.edge_count; ++e) {
    const int root = find(parent, e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(r.components.size());
      r.components.push_back({ComponentTag::ClosedTrivial, e});
    }
    r.edge_component[e] = slot[root];
  }
  for (int e : sk.bottom_edges) r.components[r.edge_component[e]].bottom_ends++;
  for (int e : sk.top_edges) r.components[r.edge_component[e]].top_ends++;

  std::size_t arc_bottom = 0, arc_top = 0;
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    ResolvedComponent& c = r.components[i];
    if (mode == ResolutionMode::Annular) {
      // A simple closed curve in the annulus meets the cut an odd number of
      // times exactly when it winds around the core.
      c.tag = (c.top_ends % 2 == 1) ? ComponentTag::ClosedEssential : ComponentTag::ClosedTrivial;
    } else if (c.bottom_ends == 0 && c.top_ends == 0) {
      c.tag = ComponentTag::ClosedTrivial;
    } else if (c.bottom_ends == 1 && c.top_ends == 1) {
      c.tag = ComponentTag::ArcVertical;
    } else if (c.bottom_ends == 2 && c.top_ends == 0) {
      c.tag = ComponentTag::ArcBottom;
      ++arc_bottom;
    } else if (c.bottom_ends == 0 && c.top_ends == 2) {
      c.tag = ComponentTag::ArcTop;
      ++arc_top;
    } else {
      throw InternalError("traced component with " + std::to_string(c.bottom_ends) + " bottom and " +
                          std::to_string(c.top_ends) + " top ends");
    }
    if (c.closed()) {
      c.closed_index = r.a++;
      r.closed.push_back(static_cast<int>(i));
      if (c.tag == ComponentTag::ClosedEssential) {
        ++r.essential;
        r.essential_mask |= std::uint64_t{1} << c.closed_index;
      }
    } else {
      ++r.b;
    }
  }
  if (d.balanced() && arc_bottom != arc_top) throw InternalError("unequal bottom and top turnback counts");
  return r;
}

Resolution resolve_bits(const TangleDiagram& d, const std::vector<int>& bits, ResolutionMode mode) {
  if (static_cast<int>(bits.size()) != d.crossing_count())
    throw std::invalid_argument("assignment has " + std::to_string(bits.size()) + " bits for " +
                                std::to_string(d.crossing_count()) + " crossings");
  std::uint64_t a = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("assignment bits must be 0 or 1");
    if (bits[i]) a |= std::uint64_t{1} << i;
  }
  return resolve(d, a, mode);
}

SaddleType classify_saddle(const TangleDiagram& d, const Resolution& src, const Resolution& dst, int crossing) {
  SaddleType s;
  if (src.backtracks() || dst.backtracks()) return s;

  const Crossing& x = d.skeleton().crossings.at(static_cast<std::size_t>(crossing));
  for (int e : {x.bl, x.br, x.tl, x.tr}) {
    push_unique(s.source_participants, src.edge_component[e]);
    push_unique(s.target_participants, dst.edge_component[e]);
  }
  std::sort(s.source_participants.begin(), s.source_participants.end());
  std::sort(s.target_participants.begin(), s.target_participants.end());

  s.closed_map.assign(static_cast<std::size_t>(src.a), -1);
  for (int ci = 0; ci < src.a; ++ci) {
    const int c = src.closed[ci];
    if (std::find(s.source_participants.begin(), s.source_participants.end(), c) != s.source_participants.end()) continue;
    const int t = dst.edge_component[src.components[c].rep_edge];
    const int ti = dst.components[t].closed_index;
    if (ti < 0) throw InternalError("untouched closed component became an arc");
    s.closed_map[ci] = ti;
  }

  auto closed_idx = [](const Resolution& r, int comp) { return r.components[comp].closed_index; };
  const std::size_t ns = s.source_participants.size(), nt = s.target_participants.size();
  if (ns == 2 && nt == 1) {
    int a = closed_idx(src, s.source_participants[0]);
    int b = closed_idx(src, s.source_participants[1]);
    s.dst_i = closed_idx(dst, s.target_participants[0]);
    if (a >= 0 && b >= 0) {
      s.kind = SaddleKind::MergeClosedClosed;
      if (s.dst_i < 0) throw InternalError("two circles merged into an arc");
    } else if (a >= 0 || b >= 0) {
      s.kind = SaddleKind::MergeClosedArc;
      if (a < 0) std::swap(a, b);
      if (s.dst_i >= 0) throw InternalError("circle and arc merged into a circle");
    } else {
      throw InternalError("arc-arc merge between non-backtracking resolutions");
    }
    s.src_i = a;
    s.src_j = b;
  } else if (ns == 1 && nt == 2) {
    s.src_i = closed_idx(src, s.source_participants[0]);
    int a = closed_idx(dst, s.target_participants[0]);
    int b = closed_idx(dst, s.target_participants[1]);
    if (s.src_i >= 0) {
      if (a < 0 || b < 0) throw InternalError("circle split into an arc");
      s.kind = SaddleKind::SplitIntoClosedClosed;
    } else {
      if (a >= 0 && b >= 0) throw InternalError("arc split into two circles");
      if (a < 0 && b < 0) throw InternalError("arc split into two arcs between non-backtracking resolutions");
      s.kind = SaddleKind::SplitIntoClosedArc;
      if (a < 0) std::swap(a, b);
    }
    s.dst_i = a;
    s.dst_j = b;
  } else {
    throw InternalError("saddle changed the component count by " + std::to_string(static_cast<int>(nt) - static_cast<int>(ns)));
  }
  return s;
}

SaddleType saddle_classify(const TangleDiagram& d, std::uint64_t from, std::uint64_t to, ResolutionMode mode) {
  const std::uint64_t diff = from ^ to;
  if (diff == 0 || (diff & (diff - 1)) != 0 || (to & diff) == 0)
    throw std::invalid_argument("target vertex is not an immediate successor");
  const int crossing = std::countr_zero(diff);
  if (crossing >= d.crossing_count()) throw std::invalid_argument("bit beyond crossing count");
  return classify_saddle(d, resolve(d, from, mode), resolve(d, to, mode), crossing);
}

}  // namespace skh
