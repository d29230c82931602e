#include "skh/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "skh/error.hpp"

namespace skh::oracle {

namespace {

// One node per strand position per level; level L sits just below slice L.
struct Grid {
  std::vector<int> width;   // width[L], L = 0..S
  std::vector<int> offset;  // first node of level L
  int nodes = 0;
  int id(int level, int pos) const { return offset[static_cast<std::size_t>(level)] + pos - 1; }
};

Grid make_grid(const TangleDiagram& d) {
  Grid g;
  int w = d.n_bottom();
  g.width.push_back(w);
  for (const MorseSlice& s : d.slices()) {
    if (s.kind == SliceKind::Cup) w += 2;
    if (s.kind == SliceKind::Cap) w -= 2;
    g.width.push_back(w);
  }
  for (int x : g.width) {
    g.offset.push_back(g.nodes);
    g.nodes += x;
  }
  return g;
}

// Upward sweep of strand directions, then the sign of every crossing.
std::pair<int, int> count_signs(const TangleDiagram& d) {
  std::vector<bool> up = d.bottom_up();
  int plus = 0, minus = 0;
  for (const MorseSlice& s : d.slices()) {
    const auto p = static_cast<std::size_t>(s.pos - 1);
    switch (s.kind) {
      case SliceKind::Cup: {
        const bool right_up = s.cup_dir != CupDir::RightToLeft;
        up.insert(up.begin() + static_cast<std::ptrdiff_t>(p), {!right_up, right_up});
        break;
      }
      case SliceKind::Cap:
        up.erase(up.begin() + static_cast<std::ptrdiff_t>(p), up.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        break;
      default: {
        // strand a runs lower-left to upper-right, strand b lower-right to upper-left
        const bool a_up = up[p], b_up = up[p + 1];
        const int ax = a_up ? 1 : -1, ay = a_up ? 1 : -1;
        const int bx = b_up ? -1 : 1, by = b_up ? 1 : -1;
        const bool a_over = s.kind == SliceKind::CrossLOver;
        const int cr = a_over ? ax * by - ay * bx : bx * ay - by * ax;
        (cr > 0 ? plus : minus) += 1;
        up[p] = b_up;
        up[p + 1] = a_up;
      }
    }
  }
  return {plus, minus};
}

struct Graph {
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> cut;  // edge crosses the closure locus, stored top node -> bottom node
};

Graph smoothing(const TangleDiagram& d, const Grid& g, const std::string& vertex, bool annular) {
  Graph gr;
  auto add = [&](int u, int v, bool cut = false) {
    gr.edges.emplace_back(u, v);
    gr.cut.push_back(cut);
  };
  std::size_t c = 0;
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    const MorseSlice& sl = d.slices()[s];
    const int L = static_cast<int>(s), p = sl.pos, w = g.width[s];
    switch (sl.kind) {
      case SliceKind::Cup:
        add(g.id(L + 1, p), g.id(L + 1, p + 1));
        for (int q = 1; q <= w; ++q) add(g.id(L, q), g.id(L + 1, q < p ? q : q + 2));
        break;
      case SliceKind::Cap:
        add(g.id(L, p), g.id(L, p + 1));
        for (int q = 1; q <= w; ++q) {
          if (q < p) add(g.id(L, q), g.id(L + 1, q));
          else if (q > p + 1) add(g.id(L, q), g.id(L + 1, q - 2));
        }
        break;
      default: {
        const bool one = vertex[c++] == '1';
        const bool vertical = (sl.kind == SliceKind::CrossLOver) != one;
        if (vertical) {
          add(g.id(L, p), g.id(L + 1, p));
          add(g.id(L, p + 1), g.id(L + 1, p + 1));
        } else {
          add(g.id(L, p), g.id(L, p + 1));
          add(g.id(L + 1, p), g.id(L + 1, p + 1));
        }
        for (int q = 1; q <= w; ++q) {
          if (q != p && q != p + 1) add(g.id(L, q), g.id(L + 1, q));
        }
      }
    }
  }
  if (annular) {
    const int top = static_cast<int>(g.width.size()) - 1;
    for (int q = 1; q <= g.width[0]; ++q) add(g.id(top, q), g.id(0, q), true);
  }
  return gr;
}

struct State {
  std::vector<int> comp;         // node -> component
  std::vector<int> closed_index; // component -> closed index, -1 for arcs
  std::vector<int> min_node;     // closed index -> smallest node
  std::vector<bool> essential;   // closed index
  bool backtracks = false;
  int a = 0;
};

State trace(const TangleDiagram& d, const Grid& g, const std::string& vertex, bool annular) {
  const Graph gr = smoothing(d, g, vertex, annular);
  // half-edges: 2e at the first node of edge e, 2e+1 at the second
  std::vector<std::vector<int>> at(static_cast<std::size_t>(g.nodes));
  for (std::size_t e = 0; e < gr.edges.size(); ++e) {
    at[static_cast<std::size_t>(gr.edges[e].first)].push_back(static_cast<int>(2 * e));
    at[static_cast<std::size_t>(gr.edges[e].second)].push_back(static_cast<int>(2 * e + 1));
  }
  auto node_of = [&](int h) {
    const auto& e = gr.edges[static_cast<std::size_t>(h / 2)];
    return h % 2 == 0 ? e.first : e.second;
  };

  State st;
  st.comp.assign(static_cast<std::size_t>(g.nodes), -1);
  const int top = static_cast<int>(g.width.size()) - 1;
  struct Info {
    int min_node, bottom = 0, top = 0;
  };
  std::vector<Info> info;
  for (int start = 0; start < g.nodes; ++start) {
    if (st.comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(info.size());
    info.push_back({start});
    std::vector<int> stack{start};
    st.comp[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const int n = stack.back();
      stack.pop_back();
      for (int h : at[static_cast<std::size_t>(n)]) {
        const int m = node_of(h ^ 1);
        if (st.comp[static_cast<std::size_t>(m)] < 0) {
          st.comp[static_cast<std::size_t>(m)] = id;
          stack.push_back(m);
        }
      }
    }
  }
  if (!annular) {
    for (int q = 1; q <= g.width[0]; ++q) info[static_cast<std::size_t>(st.comp[static_cast<std::size_t>(g.id(0, q))])].bottom++;
    for (int q = 1; q <= g.width[static_cast<std::size_t>(top)]; ++q)
      info[static_cast<std::size_t>(st.comp[static_cast<std::size_t>(g.id(top, q))])].top++;
  }
  // components were discovered in order of smallest node
  st.closed_index.assign(info.size(), -1);
  for (std::size_t c = 0; c < info.size(); ++c) {
    if (info[c].bottom + info[c].top > 0) {
      if (info[c].bottom == 0) st.backtracks = true;
      continue;
    }
    st.closed_index[c] = st.a++;
    st.min_node.push_back(info[c].min_node);
    // walk the circle once, counting signed passes through the cut
    int winding = 0;
    if (annular) {
      const int h0 = at[static_cast<std::size_t>(info[c].min_node)][0];
      int h = h0;
      do {
        const int e = h / 2;
        if (gr.cut[static_cast<std::size_t>(e)]) winding += h % 2 == 0 ? 1 : -1;
        const int arrive = h ^ 1;
        const auto& hs = at[static_cast<std::size_t>(node_of(arrive))];
        h = hs[0] == arrive ? hs[1] : hs[0];
      } while (h != h0);
    }
    st.essential.push_back(winding != 0);
  }
  return st;
}

using Element = std::set<std::uint64_t>;  // F2 sum of wedge monomials

void toggle(Element& e, std::uint64_t m) {
  if (!e.erase(m)) e.insert(m);
}

// v ^ x for a vector v given as a sum of basis classes
Element wedge(std::uint64_t v, const Element& x) {
  Element out;
  for (std::uint64_t m : x) {
    for (int b = 0; b < 64; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if ((v & bit) && !(m & bit)) toggle(out, m | bit);
    }
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<char>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && !m[piv][c]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::string vertex_string(unsigned v, int c) {
  std::string s(static_cast<std::size_t>(c), '0');
  for (int x = 0; x < c; ++x) {
    if (v >> x & 1U) s[static_cast<std::size_t>(x)] = '1';
  }
  return s;
}

}  // namespace

DenseComplex build(const TangleDiagram& d, Mode mode) {
  std::size_t c = 0;
  std::vector<std::size_t> crossing_slice;
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    if (d.slices()[s].kind == SliceKind::CrossLOver || d.slices()[s].kind == SliceKind::CrossROver) {
      crossing_slice.push_back(s);
      ++c;
    }
  }
  if (c > static_cast<std::size_t>(kMaxCrossings)) throw SizeCapError("oracle handles at most 10 crossings");
  const Grid g = make_grid(d);
  const bool annular = mode != Mode::Tangle;
  if (g.width.front() != g.width.back()) throw IncompatibleInput("oracle needs a balanced diagram");
  const auto [np, nm] = count_signs(d);
  const int ci = static_cast<int>(c);

  DenseComplex out;
  out.mode = mode;
  std::vector<State> states;
  std::map<std::pair<std::string, std::string>, int> index;
  for (unsigned v = 0; v < (1U << c); ++v) {
    const std::string vs = vertex_string(v, ci);
    states.push_back(trace(d, g, vs, annular));
    const State& st = states.back();
    if (!annular && st.backtracks) continue;
    const int ones = static_cast<int>(std::count(vs.begin(), vs.end(), '1'));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << st.a); ++m) {
      DenseGenerator gen;
      gen.vertex = vs;
      int minus = 0, k = 0;
      for (int x = 0; x < st.a; ++x) {
        const bool neg = m >> x & 1U;
        gen.labels += neg ? '-' : '+';
        minus += neg;
        if (st.essential[static_cast<std::size_t>(x)]) k += neg ? -1 : 1;
      }
      gen.i = ones - nm;
      gen.j = (st.a - 2 * minus) + ones + np - 2 * nm;
      gen.k = k;
      index[{gen.vertex, gen.labels}] = static_cast<int>(out.generators.size());
      out.generators.push_back(std::move(gen));
    }
  }
  out.boundary.resize(out.generators.size());

  for (std::size_t gi = 0; gi < out.generators.size(); ++gi) {
    const DenseGenerator& gen = out.generators[gi];
    unsigned v = 0;
    for (int x = 0; x < ci; ++x) {
      if (gen.vertex[static_cast<std::size_t>(x)] == '1') v |= 1U << x;
    }
    const State& src = states[v];
    std::map<int, int> image;  // target generator -> coefficient
    for (int x = 0; x < ci; ++x) {
      if (v >> x & 1U) continue;
      const unsigned w = v | 1U << x;
      const State& dst = states[w];
      if (!annular && dst.backtracks) continue;
      const MorseSlice& sl = d.slices()[crossing_slice[static_cast<std::size_t>(x)]];
      const int L = static_cast<int>(crossing_slice[static_cast<std::size_t>(x)]);
      const int touch[4] = {g.id(L, sl.pos), g.id(L, sl.pos + 1), g.id(L + 1, sl.pos), g.id(L + 1, sl.pos + 1)};
      std::set<int> src_parts, dst_parts;
      for (int n : touch) {
        src_parts.insert(src.comp[static_cast<std::size_t>(n)]);
        dst_parts.insert(dst.comp[static_cast<std::size_t>(n)]);
      }
      auto cls = [&](int comp) -> std::uint64_t {
        const int ix = dst.closed_index[static_cast<std::size_t>(comp)];
        return ix < 0 ? 0 : std::uint64_t{1} << ix;
      };
      Element e{0};
      for (int x2 = 0; x2 < src.a; ++x2) {
        if (gen.labels[static_cast<std::size_t>(x2)] != '-') continue;
        e = wedge(cls(dst.comp[static_cast<std::size_t>(src.min_node[static_cast<std::size_t>(x2)])]), e);
      }
      if (src_parts.size() == 1 && dst_parts.size() == 2) {
        std::uint64_t f = 0;
        for (int comp : dst_parts) f ^= cls(comp);
        e = wedge(f, e);
      } else if (!(src_parts.size() == 2 && dst_parts.size() == 1)) {
        throw InternalError("oracle: saddle neither merges nor splits");
      }
      const std::string ws = vertex_string(w, ci);
      for (std::uint64_t m : e) {
        std::string labels;
        for (int x2 = 0; x2 < dst.a; ++x2) labels += (m >> x2 & 1U) ? '-' : '+';
        const int t = index.at({ws, labels});
        if (mode == Mode::AnnularAssociatedGraded && out.generators[static_cast<std::size_t>(t)].k != gen.k) continue;
        image[t] ^= 1;
      }
    }
    for (auto [t, coef] : image) {
      if (coef) out.boundary[gi].push_back(t);
    }
  }
  if (!out.squares_to_zero()) throw InternalError("oracle: d^2 != 0");
  return out;
}

bool DenseComplex::squares_to_zero() const {
  for (const auto& row : boundary) {
    std::map<int, int> acc;
    for (int t : row) {
      for (int u : boundary[static_cast<std::size_t>(t)]) acc[u] ^= 1;
    }
    for (auto [u, coef] : acc) {
      if (coef) return false;
    }
  }
  return true;
}

GradedDims homology(const DenseComplex& c) {
  const bool triply = c.mode == Mode::AnnularAssociatedGraded;
  auto key = [&](const DenseGenerator& g) {
    return GradingKey{g.i, g.j, triply ? std::optional<int>(g.k) : std::nullopt};
  };
  std::map<GradingKey, std::vector<int>> buckets;
  for (std::size_t g = 0; g < c.generators.size(); ++g) buckets[key(c.generators[g])].push_back(static_cast<int>(g));

  std::map<GradingKey, std::size_t> out_rank;
  for (const auto& [k, gens] : buckets) {
    GradingKey up = k;
    up.i += 1;
    auto it = buckets.find(up);
    std::map<int, std::size_t> col;
    if (it != buckets.end()) {
      for (std::size_t q = 0; q < it->second.size(); ++q) col[it->second[q]] = q;
    }
    std::vector<std::vector<char>> m(gens.size(), std::vector<char>(col.size(), 0));
    for (std::size_t r = 0; r < gens.size(); ++r) {
      for (int t : c.boundary[static_cast<std::size_t>(gens[r])]) {
        auto ct = col.find(t);
        if (ct == col.end()) throw InternalError("oracle: differential leaves its grading");
        m[r][ct->second] ^= 1;
      }
    }
    out_rank[k] = dense_rank(std::move(m));
  }
  GradedDims dims(triply);
  for (const auto& [k, gens] : buckets) {
    GradingKey down = k;
    down.i -= 1;
    const std::size_t in = out_rank.contains(down) ? out_rank[down] : 0;
    dims.add(k, gens.size() - out_rank[k] - in);
  }
  return dims;
}

GradedDims oracle_homology(const TangleDiagram& d) { return homology(build(d, Mode::Tangle)); }

GradedDims oracle_homology(const AnnularDiagram& d) {
  return homology(build(d.core(), Mode::AnnularAssociatedGraded));
}

GradedDims oracle_total_homology(const AnnularDiagram& d) { return homology(build(d.core(), Mode::AnnularTotal)); }

}  // namespace skh::oracle
