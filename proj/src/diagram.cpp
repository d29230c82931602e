#include "skh/diagram.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "skh/error.hpp"

namespace skh {

namespace {

constexpr int lower_end(int e) { return 2 * e; }
constexpr int upper_end(int e) { return 2 * e + 1; }

// Checks that a slice at strand width `w` is in range and returns the width above it.
int width_after(const MorseSlice& s, int w, std::string* why) {
  switch (s.kind) {
    case SliceKind::CrossLOver:
    case SliceKind::CrossROver:
      if (s.pos < 1 || s.pos + 1 > w) {
        if (why) *why = "crossing at position " + std::to_string(s.pos) + " needs strands " +
                        std::to_string(s.pos) + " and " + std::to_string(s.pos + 1) +
                        " but width is " + std::to_string(w);
        return -1;
      }
      return w;
    case SliceKind::Cup:
      if (s.pos < 1 || s.pos > w + 1) {
        if (why) *why = "cup at position " + std::to_string(s.pos) + " outside 1.." + std::to_string(w + 1);
        return -1;
      }
      return w + 2;
    case SliceKind::Cap:
      if (s.pos < 1 || s.pos + 1 > w) {
        if (why) *why = "cap at position " + std::to_string(s.pos) + " needs two strands but width is " +
                        std::to_string(w);
        return -1;
      }
      return w - 2;
  }
  return -1;
}

Skeleton build_skeleton(int n_bottom, const std::vector<MorseSlice>& slices) {
  Skeleton sk;
  std::vector<int> cur(n_bottom);
  std::iota(cur.begin(), cur.end(), 0);
  sk.edge_count = n_bottom;
  sk.bottom_edges = cur;
  sk.widths.push_back(n_bottom);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const MorseSlice& s = slices[i];
    std::string why;
    const int w = static_cast<int>(cur.size());
    if (width_after(s, w, &why) < 0) throw DiagramError("slice " + std::to_string(i + 1) + ": " + why);
    const auto at = static_cast<std::size_t>(s.pos - 1);
    switch (s.kind) {
      case SliceKind::CrossLOver:
      case SliceKind::CrossROver: {
        Crossing x;
        x.slice = i;
        x.kind = s.kind;
        x.bl = cur[at];
        x.br = cur[at + 1];
        x.tl = sk.edge_count++;
        x.tr = sk.edge_count++;
        cur[at] = x.tl;
        cur[at + 1] = x.tr;
        sk.crossings.push_back(x);
        break;
      }
      case SliceKind::Cup: {
        const int l = sk.edge_count++;
        const int r = sk.edge_count++;
        cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(at), {l, r});
        sk.cups.emplace_back(l, r);
        sk.cup_slices.push_back(i);
        break;
      }
      case SliceKind::Cap:
        sk.caps.emplace_back(cur[at], cur[at + 1]);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(at), cur.begin() + static_cast<std::ptrdiff_t>(at) + 2);
        break;
    }
    sk.widths.push_back(static_cast<int>(cur.size()));
  }
  sk.top_edges = cur;
  return sk;
}

// Junction partner of every segment end in the unresolved diagram, or -1 at the boundary.
std::vector<int> unresolved_partners(const Skeleton& sk, bool closure) {
  std::vector<int> partner(2 * static_cast<std::size_t>(sk.edge_count), -1);
  auto link = [&](int a, int b) {
    partner[a] = b;
    partner[b] = a;
  };
  for (const Crossing& x : sk.crossings) {
    link(upper_end(x.bl), lower_end(x.tr));
    link(upper_end(x.br), lower_end(x.tl));
  }
  for (auto [l, r] : sk.cups) link(lower_end(l), lower_end(r));
  for (auto [l, r] : sk.caps) link(upper_end(l), upper_end(r));
  if (closure) {
    for (std::size_t q = 0; q < sk.top_edges.size(); ++q) link(upper_end(sk.top_edges[q]), lower_end(sk.bottom_edges[q]));
  }
  return partner;
}

class Orienter {
public:
  Orienter(const Skeleton& sk, bool closure)
      : partner_(unresolved_partners(sk, closure)), known_(sk.edge_count, false), up_(sk.edge_count, false) {}

  bool known(int e) const { return known_[e]; }
  bool up(int e) const { return up_[e]; }

  // Orients the whole component through segment e, with e pointing up iff `up`.
  void orient_component(int e, bool up) {
    assign(e, up);
    int cur = e;
    bool cu = up;
    for (;;) {
      const int nxt = partner_[cu ? upper_end(cur) : lower_end(cur)];
      if (nxt < 0) break;
      const int ne = nxt / 2;
      const bool nu = (nxt % 2 == 0);
      if (!assign(ne, nu)) break;
      cur = ne;
      cu = nu;
    }
    cur = e;
    cu = up;
    for (;;) {
      const int prv = partner_[cu ? lower_end(cur) : upper_end(cur)];
      if (prv < 0) break;
      const int pe = prv / 2;
      const bool pu = (prv % 2 == 1);
      if (!assign(pe, pu)) break;
      cur = pe;
      cu = pu;
    }
  }

  std::vector<bool> take() { return std::move(up_); }

private:
  bool assign(int e, bool up) {
    if (known_[e]) {
      if (up_[e] != up) throw DiagramError("inconsistent orientation along a component");
      return false;
    }
    known_[e] = true;
    up_[e] = up;
    return true;
  }

  std::vector<int> partner_;
  std::vector<bool> known_;
  std::vector<bool> up_;
};

int crossing_sign(const Crossing& x, const std::vector<bool>& up) {
  // Strand A runs bl -> tr, strand B runs br -> tl; directions as plane vectors.
  const int ax = up[x.bl] ? 1 : -1, ay = ax;
  const int bx = up[x.br] ? -1 : 1, by = -bx;
  const bool a_over = x.kind == SliceKind::CrossLOver;
  const int ox = a_over ? ax : bx, oy = a_over ? ay : by;
  const int ux = a_over ? bx : ax, uy = a_over ? by : ay;
  return (ox * uy - oy * ux) > 0 ? 1 : -1;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

TangleDiagram TangleDiagram::make(int n_bottom, std::vector<MorseSlice> slices,
                                  std::optional<std::vector<bool>> orient, OrientationScope scope) {
  if (n_bottom < 0) throw DiagramError("negative strand count");
  if (orient && static_cast<int>(orient->size()) != n_bottom)
    throw DiagramError("orientation has " + std::to_string(orient->size()) + " flags for " +
                       std::to_string(n_bottom) + " bottom endpoints");

  TangleDiagram d;
  d.n_bottom_ = n_bottom;
  d.slices_ = std::move(slices);
  d.skeleton_ = build_skeleton(n_bottom, d.slices_);
  d.scope_ = scope;
  d.orientation_declared_ = orient.has_value();
  Skeleton& sk = d.skeleton_;

  const bool closure = scope == OrientationScope::AnnularClosure;
  if (closure && sk.top_edges.size() != sk.bottom_edges.size())
    throw DiagramError("annular closure of an unbalanced tangle");

  Orienter o(sk, closure);
  for (int q = 0; q < n_bottom; ++q) {
    const int e = sk.bottom_edges[q];
    if (o.known(e)) continue;
    o.orient_component(e, orient ? (*orient)[q] : true);
  }
  for (std::size_t c = 0; c < sk.cups.size(); ++c) {
    const auto [l, r] = sk.cups[c];
    if (o.known(r)) continue;
    const CupDir dir = d.slices_[sk.cup_slices[c]].cup_dir;
    o.orient_component(r, dir != CupDir::RightToLeft);
  }
  for (int e = 0; e < sk.edge_count; ++e) {
    if (!o.known(e)) throw InternalError("segment left unoriented");
  }
  if (orient) {
    for (int q = 0; q < n_bottom; ++q) {
      if (o.up(sk.bottom_edges[q]) != (*orient)[q])
        throw DiagramError("inconsistent orientation: bottom endpoint " + std::to_string(q + 1) +
                           " is forced to point " + (o.up(sk.bottom_edges[q]) ? "up" : "down"));
    }
  }
  sk.edge_up = o.take();

  d.bottom_up_.resize(n_bottom);
  for (int q = 0; q < n_bottom; ++q) d.bottom_up_[q] = sk.edge_up[sk.bottom_edges[q]];
  for (std::size_t c = 0; c < sk.cups.size(); ++c) {
    d.slices_[sk.cup_slices[c]].cup_dir = sk.edge_up[sk.cups[c].second] ? CupDir::LeftToRight : CupDir::RightToLeft;
  }
  for (Crossing& x : sk.crossings) {
    x.sign = crossing_sign(x, sk.edge_up);
    (x.sign > 0 ? d.n_plus_ : d.n_minus_)++;
  }
  return d;
}

std::vector<bool> TangleDiagram::top_up() const {
  std::vector<bool> out(skeleton_.top_edges.size());
  for (std::size_t q = 0; q < out.size(); ++q) out[q] = skeleton_.edge_up[skeleton_.top_edges[q]];
  return out;
}

std::vector<TangleComponent> TangleDiagram::components() const {
  const Skeleton& sk = skeleton_;
  UnionFind uf(sk.edge_count);
  for (const Crossing& x : sk.crossings) {
    uf.unite(x.bl, x.tr);
    uf.unite(x.br, x.tl);
  }
  for (auto [l, r] : sk.cups) uf.unite(l, r);
  for (auto [l, r] : sk.caps) uf.unite(l, r);
  std::vector<int> slot(sk.edge_count, -1);
  std::vector<TangleComponent> comps;
  for (int e = 0; e < sk.edge_count; ++e) {
    const int r = uf.find(e);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.push_back({e, 0, 0});
    }
  }
  for (int e : sk.bottom_edges) comps[slot[uf.find(e)]].bottom_ends++;
  for (int e : sk.top_edges) comps[slot[uf.find(e)]].top_ends++;
  return comps;
}

bool is_string_link(const TangleDiagram& d) {
  for (const TangleComponent& c : d.components()) {
    if (c.bottom_ends != 1 || c.top_ends != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& t, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

}  // namespace

ParsedInput parse_input(std::string_view text) {
  std::optional<int> strands;
  std::optional<std::vector<bool>> orient;
  int orient_line = 0;
  int closure_line = 0;
  bool seen_header = false;
  bool any_directive = false;
  std::vector<MorseSlice> slices;
  int width = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> tok = split_tokens(line);
    if (tok.empty()) continue;

    const std::string_view head = tok[0].text;
    auto expect_args = [&](std::size_t n) {
      if (tok.size() != n + 1) {
        const int col = tok.size() > n + 1 ? tok[n + 1].column : static_cast<int>(line.size()) + 1;
        throw ParseError(line_no, col, "'" + std::string(head) + "' takes " + std::to_string(n) + " argument(s)");
      }
    };

    if (head == "tangle") {
      if (seen_header || any_directive) throw ParseError(line_no, tok[0].column, "'tangle' header must come first");
      expect_args(1);
      if (tok[1].text != "v1") throw ParseError(line_no, tok[1].column, "unsupported format version '" + std::string(tok[1].text) + "'");
      seen_header = true;
      continue;
    }
    any_directive = true;
    if (closure_line != 0) throw ParseError(line_no, tok[0].column, "no directives may follow 'closure'");

    if (head == "strands") {
      if (strands) throw ParseError(line_no, tok[0].column, "duplicate 'strands' directive");
      expect_args(1);
      const int n = parse_int(tok[1], line_no);
      if (n < 0) throw ParseError(line_no, tok[1].column, "strand count must be non-negative");
      strands = n;
      width = n;
    } else if (head == "orient") {
      if (!strands) throw ParseError(line_no, tok[0].column, "'orient' before 'strands'");
      if (orient) throw ParseError(line_no, tok[0].column, "duplicate 'orient' directive");
      if (!slices.empty()) throw ParseError(line_no, tok[0].column, "'orient' must precede all slices");
      expect_args(static_cast<std::size_t>(*strands));
      std::vector<bool> flags;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i].text == "u") flags.push_back(true);
        else if (tok[i].text == "d") flags.push_back(false);
        else throw ParseError(line_no, tok[i].column, "orientation flag must be 'u' or 'd'");
      }
      orient = std::move(flags);
      orient_line = line_no;
    } else if (head == "X+" || head == "X-" || head == "CUP" || head == "CAP") {
      if (!strands) throw ParseError(line_no, tok[0].column, "slice before 'strands'");
      if (head == "CUP" && tok.size() == 3) {
        if (tok[2].text != "cw" && tok[2].text != "ccw")
          throw ParseError(line_no, tok[2].column, "cup direction must be 'cw' or 'ccw'");
      } else {
        expect_args(1);
      }
      MorseSlice s;
      s.kind = head == "X+"  ? SliceKind::CrossLOver
             : head == "X-"  ? SliceKind::CrossROver
             : head == "CUP" ? SliceKind::Cup
                             : SliceKind::Cap;
      s.pos = parse_int(tok[1], line_no);
      if (tok.size() == 3) s.cup_dir = tok[2].text == "cw" ? CupDir::RightToLeft : CupDir::LeftToRight;
      std::string why;
      const int next = width_after(s, width, &why);
      if (next < 0) throw ParseError(line_no, tok[1].column, why);
      width = next;
      slices.push_back(s);
    } else if (head == "closure") {
      expect_args(1);
      if (tok[1].text != "annular") throw ParseError(line_no, tok[1].column, "unknown closure '" + std::string(tok[1].text) + "'");
      closure_line = line_no;
    } else {
      throw ParseError(line_no, tok[0].column, "unknown directive '" + std::string(head) + "'");
    }
  }
  if (!strands) throw ParseError(line_no, 1, "missing 'strands' directive");

  ParsedInput out;
  try {
    out.diagram = TangleDiagram::make(*strands, std::move(slices), orient);
  } catch (const DiagramError& e) {
    throw ParseError(orient_line ? orient_line : 1, 1, e.what());
  }
  if (closure_line) {
    if (!out.diagram.balanced())
      throw ParseError(closure_line, 1, "annular closure declared but the tangle is unbalanced (" +
                                            std::to_string(out.diagram.n_bottom()) + " bottom, " +
                                            std::to_string(out.diagram.n_top()) + " top endpoints)");
    try {
      (void)annular_closure(out.diagram);
    } catch (const DiagramError& e) {
      throw ParseError(closure_line, 1, e.what());
    }
    out.annular = true;
  }
  return out;
}

TangleDiagram parse_tangle(std::string_view text) { return parse_input(text).diagram; }

AnnularDiagram parse_annular(std::string_view text) { return annular_closure(parse_input(text).diagram); }

std::string to_text(const TangleDiagram& d, bool annular) {
  std::ostringstream os;
  os << "tangle v1\nstrands " << d.n_bottom() << '\n';
  bool any_down = false;
  for (bool b : d.bottom_up()) any_down |= !b;
  if (d.n_bottom() > 0 && (d.orientation_declared() || any_down)) {
    os << "orient";
    for (bool b : d.bottom_up()) os << ' ' << (b ? 'u' : 'd');
    os << '\n';
  }
  // A component without bottom endpoints takes its direction from its first
  // cup; mark that cup when it runs clockwise so the text reproduces it.
  const Skeleton& sk = d.skeleton();
  UnionFind uf(sk.edge_count);
  for (const Crossing& x : sk.crossings) {
    uf.unite(x.bl, x.tr);
    uf.unite(x.br, x.tl);
  }
  for (auto [l, r] : sk.cups) uf.unite(l, r);
  for (auto [l, r] : sk.caps) uf.unite(l, r);
  std::vector<bool> seen(static_cast<std::size_t>(sk.edge_count), false);
  for (int e : sk.bottom_edges) seen[static_cast<std::size_t>(uf.find(e))] = true;
  std::size_t cup = 0;
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const MorseSlice& s = d.slices()[i];
    switch (s.kind) {
      case SliceKind::CrossLOver: os << "X+ "; break;
      case SliceKind::CrossROver: os << "X- "; break;
      case SliceKind::Cup: os << "CUP "; break;
      case SliceKind::Cap: os << "CAP "; break;
    }
    os << s.pos;
    if (s.kind == SliceKind::Cup) {
      const auto root = static_cast<std::size_t>(uf.find(sk.cups[cup++].second));
      if (!seen[root] && s.cup_dir == CupDir::RightToLeft) os << " cw";
      seen[root] = true;
    }
    os << '\n';
  }
  if (annular) os << "closure annular\n";
  return os.str();
}

ValidationReport validate(const TangleDiagram& d) {
  ValidationReport r;
  r.balanced = d.balanced();
  bool string_link = true;
  for (const TangleComponent& c : d.components()) {
    if (c.closed()) r.has_closed_components = true;
    if (c.bottom_ends != 1 || c.top_ends != 1) string_link = false;
  }
  r.is_string_link_shape = string_link;
  if (!r.balanced) {
    r.errors.push_back({"unbalanced", std::to_string(d.n_bottom()) + " bottom endpoints but " +
                                          std::to_string(d.n_top()) + " top endpoints"});
  }
  return r;
}

TangleDiagram compose(const TangleDiagram& t1, const TangleDiagram& t2) {
  if (t1.n_top() != t2.n_bottom())
    throw DiagramError("cannot stack: lower tangle has " + std::to_string(t1.n_top()) +
                       " top endpoints, upper has " + std::to_string(t2.n_bottom()) + " bottom endpoints");
  std::vector<MorseSlice> slices = t1.slices();
  slices.insert(slices.end(), t2.slices().begin(), t2.slices().end());
  std::optional<std::vector<bool>> orient;
  if (t1.orientation_declared()) orient = t1.bottom_up();
  return TangleDiagram::make(t1.n_bottom(), std::move(slices), orient);
}

AnnularDiagram annular_closure(const TangleDiagram& d) {
  if (!d.balanced())
    throw DiagramError("annular closure needs a balanced tangle (" + std::to_string(d.n_bottom()) +
                       " bottom, " + std::to_string(d.n_top()) + " top endpoints)");
  std::optional<std::vector<bool>> orient;
  if (d.orientation_declared()) orient = d.bottom_up();
  return AnnularDiagram(TangleDiagram::make(d.n_bottom(), d.slices(), orient, OrientationScope::AnnularClosure));
}

}  // namespace skh
