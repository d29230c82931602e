#include "skh/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "skh/error.hpp"
#include "skh/homology.hpp"
#include "skh/resolution.hpp"

namespace skh {

std::string format_dims(const GradedDims& g) {
  std::ostringstream os;
  os << "total " << g.total() << ":";
  for (const auto& [key, dim] : g.table()) os << ' ' << to_string(key) << '=' << dim;
  return os.str();
}

GradedDims skh_tangle(const TangleDiagram& d, const BuildOptions& opts) {
  if (!d.balanced()) throw IncompatibleInput("SKh needs a balanced tangle");
  return homology_dims(build_differential(d, opts), opts.threads);
}

AnnularComputation compute_annular(const AnnularDiagram& d, const BuildOptions& opts) {
  const GradedComplex full = build_differential(d, opts);
  const GradedComplex gr = associated_graded(full);
  AnnularComputation out;
  out.skh = homology_dims(gr, opts.threads);
  out.total = homology_dims(full, opts.threads);
  out.filtration = gr.filtration();
  return out;
}

GradedDims skh_annular(const AnnularDiagram& d, const BuildOptions& opts) {
  return homology_dims(associated_graded(build_differential(d, opts)), opts.threads);
}

GradedDims kh_total(const AnnularDiagram& d, const BuildOptions& opts) {
  return homology_dims(build_differential(d, opts), opts.threads);
}

GradedDims khr_link(const TangleDiagram& d, const BuildOptions& opts) {
  if (d.n_bottom() != 1 || d.n_top() != 1)
    throw IncompatibleInput("reduced Khovanov homology needs a (1,1)-tangle, got (" + std::to_string(d.n_bottom()) +
                            "," + std::to_string(d.n_top()) + ")");
  return skh_tangle(d, opts);
}

BraidVerdict detect_braid(const TangleDiagram& d, const BuildOptions& opts) {
  BraidVerdict v;
  v.graded = skh_tangle(d, opts);
  v.total_dim = v.graded.total();
  v.is_braid_homology = v.total_dim == 1;
  return v;
}

ParityReport parity_check(const TangleDiagram& d, const BuildOptions& opts) {
  ParityReport r;
  r.total = skh_tangle(d, opts).total();
  r.string_link = is_string_link(d);
  r.passed = (r.total % 2 == 1) == r.string_link;
  r.detail = "total " + std::to_string(r.total) + (r.string_link ? ", string link" : ", not a string link");
  return r;
}

TangleDiagram knot_star(const TangleDiagram& k2, int n) {
  if (k2.n_bottom() != 1 || k2.n_top() != 1) throw IncompatibleInput("knot_star needs a (1,1)-tangle");
  if (n < 1) throw IncompatibleInput("knot_star needs at least one strand");
  std::vector<bool> orient(static_cast<std::size_t>(n), true);
  orient[0] = k2.bottom_up()[0];
  return TangleDiagram::make(n, k2.slices(), orient);
}

TangleDiagram connected_sum(const TangleDiagram& t1, const TangleDiagram& k2) {
  if (t1.n_top() < 1) throw IncompatibleInput("connected sum needs a strand to tie the knot into");
  return compose(t1, knot_star(k2, t1.n_top()));
}

TensorReport tensor_check(const TangleDiagram& t1, const TangleDiagram& k2, const BuildOptions& opts) {
  TensorReport r;
  r.lhs = skh_tangle(connected_sum(t1, k2), opts);
  r.rhs = convolve(skh_tangle(t1, opts), khr_link(k2, opts));
  r.totals_equal = r.lhs.total() == r.rhs.total();
  r.shift = find_shift(r.rhs, r.lhs);
  r.passed = r.totals_equal && r.shift.has_value();
  r.detail = "SKh(T1#K) " + format_dims(r.lhs) + " | SKh(T1)*Khr(K) " + format_dims(r.rhs);
  if (r.shift) r.detail += " | shift (" + std::to_string(r.shift->first) + "," + std::to_string(r.shift->second) + ")";
  return r;
}

namespace {

// Annular closed index of each tangle closed circle at vertex v, matched
// through the smallest segment on the circle.
std::vector<int> circle_correspondence(const Resolution& tangle, const Resolution& annular) {
  std::vector<int> map;
  for (int ci : tangle.closed) {
    const ResolvedComponent& tc = tangle.components[static_cast<std::size_t>(ci)];
    const int ac = annular.edge_component[static_cast<std::size_t>(tc.rep_edge)];
    map.push_back(annular.components[static_cast<std::size_t>(ac)].closed_index);
  }
  return map;
}

std::uint64_t remap(std::uint64_t wedge, const std::vector<int>& map) {
  std::uint64_t out = 0;
  for (std::size_t b = 0; b < map.size(); ++b) {
    if (wedge >> b & 1U) out |= std::uint64_t{1} << map[b];
  }
  return out;
}

}  // namespace

CutReport cut_check(const AnnularDiagram& d, const BuildOptions& opts) {
  CutReport r;
  const TangleDiagram& core = d.core();
  r.m = d.cut_points();
  r.j_shift = r.m;
  const GradedComplex tangle = build_differential(core, opts);
  const GradedComplex full = build_differential(d, opts);
  const GradedComplex gr = associated_graded(full);
  r.filtration = gr.filtration();

  std::vector<long long> image(tangle.size(), -1);
  std::vector<char> hit(gr.size(), 0);
  bool ok = true;
  std::size_t top_count = 0;
  for (std::size_t g = 0; g < gr.size(); ++g) top_count += gr.gradings()[g].k == r.m;
  std::ostringstream why;
  for (std::size_t t = 0; t < tangle.vertices().size() && ok; ++t) {
    const std::uint64_t v = tangle.vertices()[t];
    const Resolution rt = resolve(core, v, ResolutionMode::Tangle);
    const Resolution ra = resolve(d, v);
    const std::vector<int> map = circle_correspondence(rt, ra);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << rt.a); ++s) {
      const long long tg = tangle.find({v, s});
      const long long ag = gr.find({v, remap(s, map)});
      if (tg < 0 || ag < 0) {
        ok = false;
        why << "no annular partner for generator at vertex " << v << "; ";
        break;
      }
      const Grading& gt = tangle.gradings()[static_cast<std::size_t>(tg)];
      const Grading& ga = gr.gradings()[static_cast<std::size_t>(ag)];
      if (ga.k != r.m || ga.i != gt.i || ga.j != gt.j + r.j_shift || hit[static_cast<std::size_t>(ag)]) {
        ok = false;
        why << "grading mismatch at vertex " << v << "; ";
        break;
      }
      hit[static_cast<std::size_t>(ag)] = 1;
      image[static_cast<std::size_t>(tg)] = ag;
    }
  }
  r.generators_match = ok && top_count == tangle.size();
  if (ok && !r.generators_match) why << top_count << " generators at k = m against " << tangle.size() << " in the tangle complex; ";

  if (r.generators_match) {
    r.matrices_match = true;
    std::vector<long long> mapped;
    for (std::size_t g = 0; g < tangle.size() && r.matrices_match; ++g) {
      mapped.clear();
      for (std::uint32_t t : tangle.boundary(g)) mapped.push_back(image[t]);
      std::sort(mapped.begin(), mapped.end());
      const auto b = gr.boundary(static_cast<std::size_t>(image[g]));
      if (!std::equal(mapped.begin(), mapped.end(), b.begin(), b.end())) {
        r.matrices_match = false;
        why << "boundary of tangle generator " << g << " differs; ";
      }
    }
  }

  r.tangle = homology_dims(tangle, opts.threads);
  r.annular_top = homology_dims(gr, opts.threads).slice_k(r.m).shifted(0, -r.j_shift);
  r.homology_match = r.tangle == r.annular_top;
  if (!r.homology_match) why << "homology " << format_dims(r.annular_top) << " vs " << format_dims(r.tangle) << "; ";
  r.passed = r.generators_match && r.matrices_match && r.homology_match;
  r.detail = r.passed ? "k=" + std::to_string(r.m) + " level matches, " + format_dims(r.tangle) : why.str();
  return r;
}

SpectralReport spectral_bound_check(const AnnularDiagram& d, const BuildOptions& opts) {
  SpectralReport r;
  const AnnularComputation a = compute_annular(d, opts);
  r.collapsed = a.skh.collapse_k();
  r.total = a.total;
  r.filtration = a.filtration;
  r.bound_holds = true;
  std::ostringstream why;
  for (const auto& [key, dim] : r.total.table()) {
    if (r.collapsed.at(key.i, key.j) < dim) {
      r.bound_holds = false;
      why << "at " << to_string(key) << ": " << r.collapsed.at(key.i, key.j) << " < " << dim << "; ";
    }
  }
  r.euler_match = r.collapsed.euler_by_j() == r.total.euler_by_j();
  if (!r.euler_match) why << "Euler characteristics differ; ";
  r.passed = r.bound_holds && r.euler_match;
  r.detail = r.passed ? "SKh " + format_dims(r.collapsed) + " >= Kh " + format_dims(r.total) : why.str();
  return r;
}

}  // namespace skh
