#include "skh/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "skh/error.hpp"
#include "skh/parallel.hpp"

namespace skh {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint64_t transport(std::uint64_t wedge, const std::vector<int>& closed_map) {
  std::uint64_t out = 0;
  while (wedge) {
    const int ci = std::countr_zero(wedge);
    wedge &= wedge - 1;
    const int t = closed_map[static_cast<std::size_t>(ci)];
    if (t >= 0) out |= bit(t);
  }
  return out;
}

std::size_t chunk_count(std::size_t n, int threads) {
  if (n == 0) return 0;
  return std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)) * 16);
}

}  // namespace

int map_wedge(std::uint64_t wedge, const SaddleType& s, std::uint64_t out[2]) {
  const std::uint64_t base = transport(wedge, s.closed_map);
  switch (s.kind) {
    case SaddleKind::ZeroMap:
      return 0;
    case SaddleKind::MergeClosedClosed: {
      const bool in_i = wedge & bit(s.src_i), in_j = wedge & bit(s.src_j);
      if (in_i && in_j) return 0;
      out[0] = (in_i || in_j) ? (base | bit(s.dst_i)) : base;
      return 1;
    }
    case SaddleKind::MergeClosedArc:
      // The circle's class dies once it is identified with an arc.
      if (wedge & bit(s.src_i)) return 0;
      out[0] = base;
      return 1;
    case SaddleKind::SplitIntoClosedClosed:
      if (wedge & bit(s.src_i)) {
        out[0] = base | bit(s.dst_i) | bit(s.dst_j);
        return 1;
      }
      out[0] = base | bit(s.dst_i);
      out[1] = base | bit(s.dst_j);
      return 2;
    case SaddleKind::SplitIntoClosedArc:
      out[0] = base | bit(s.dst_i);
      return 1;
  }
  return 0;
}

std::vector<KhGenerator> edge_map(const KhGenerator& g, const CubeEdge& edge) {
  if (g.vertex != edge.from) throw std::invalid_argument("generator does not live at the edge's source vertex");
  if (edge.saddle.kind != SaddleKind::ZeroMap && g.wedge >> edge.saddle.closed_map.size())
    throw std::invalid_argument("wedge set names components the source resolution does not have");
  std::uint64_t out[2];
  const int n = map_wedge(g.wedge, edge.saddle, out);
  std::vector<KhGenerator> r;
  for (int t = 0; t < n; ++t) r.push_back({edge.to, out[t]});
  return r;
}

// ---------------------------------------------------------------------------

class ComplexBuilder {
public:
  ComplexBuilder(const TangleDiagram& d, ResolutionMode mode, const BuildOptions& opts)
      : d_(d), mode_(mode), opts_(opts) {}

  GradedComplex run(bool with_differential) {
    const int c = d_.crossing_count();
    if (c > opts_.max_crossings)
      throw SizeCapError(std::to_string(c) + " crossings exceeds the cap of " + std::to_string(opts_.max_crossings));
    if (c > 40) throw SizeCapError("cube of resolutions too large");
    if (mode_ == ResolutionMode::Tangle && !d_.balanced())
      throw IncompatibleInput("the tangle complex needs a balanced tangle");

    resolve_cube();

    GradedComplex out;
    out.mode_ = mode_ == ResolutionMode::Annular ? ComplexMode::AnnularTotal : ComplexMode::Tangle;
    out.cut_points_ = d_.n_bottom();
    enumerate(out);
    if (with_differential) {
      differential(out);
      if (const std::size_t bad = out.square_defects())
        throw InternalError("differential does not square to zero on " + std::to_string(bad) + " generators");
      if (out.mode_ == ComplexMode::AnnularTotal) audit(out);
    }
    out.rebucket();
    return out;
  }

private:
  void resolve_cube() {
    const std::size_t n = std::size_t{1} << d_.crossing_count();
    const std::size_t chunks = chunk_count(n, opts_.threads);
    std::vector<std::vector<Resolution>> parts(chunks);
    parallel_chunks(n, chunks, opts_.threads, [&](std::size_t ch, std::size_t lo, std::size_t hi) {
      for (std::size_t v = lo; v < hi; ++v) {
        Resolution r = resolve(d_, v, mode_);
        if (mode_ == ResolutionMode::Tangle && r.backtracks()) continue;
        if (r.a > 30) throw SizeCapError("resolution with more than 30 circles");
        parts[ch].push_back(std::move(r));
      }
    });
    for (auto& p : parts) {
      for (auto& r : p) alive_.push_back(std::move(r));
    }
  }

  void enumerate(GradedComplex& out) const {
    std::size_t total = 0;
    for (const Resolution& r : alive_) {
      out.vertices_.push_back(r.assignment);
      out.vertex_offset_.push_back(total);
      out.vertex_circles_.push_back(r.a);
      total += std::size_t{1} << r.a;
      if (total > 0xffffffffULL) throw SizeCapError("more than 2^32 generators");
    }
    out.vertex_offset_.push_back(total);
    out.generators_.resize(total);
    out.gradings_.resize(total);
    const int np = d_.n_plus(), nm = d_.n_minus();
    for (std::size_t t = 0; t < alive_.size(); ++t) {
      const Resolution& r = alive_[t];
      const int ones = std::popcount(r.assignment);
      const std::size_t base = out.vertex_offset_[t];
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << r.a); ++s) {
        const int in_s = std::popcount(s);
        out.generators_[base + s] = {r.assignment, s};
        out.gradings_[base + s] = {ones - nm, (r.a - 2 * in_s) + ones + np - 2 * nm,
                                   r.essential - 2 * std::popcount(s & r.essential_mask)};
      }
    }
  }

  long long alive_index(std::uint64_t v) const {
    auto it = std::lower_bound(alive_.begin(), alive_.end(), v,
                               [](const Resolution& r, std::uint64_t x) { return r.assignment < x; });
    if (it == alive_.end() || it->assignment != v) return -1;
    return it - alive_.begin();
  }

  void differential(GradedComplex& out) const {
    const std::size_t nv = alive_.size();
    const std::size_t chunks = chunk_count(nv, opts_.threads);
    struct Part {
      std::vector<std::size_t> lengths;
      std::vector<std::uint32_t> targets;
    };
    std::vector<Part> parts(chunks);
    const int c = d_.crossing_count();
    parallel_chunks(nv, chunks, opts_.threads, [&](std::size_t ch, std::size_t lo, std::size_t hi) {
      Part& part = parts[ch];
      std::vector<std::pair<std::size_t, SaddleType>> edges;
      std::vector<std::uint32_t> row;
      for (std::size_t t = lo; t < hi; ++t) {
        const Resolution& r = alive_[t];
        edges.clear();
        for (int x = 0; x < c; ++x) {
          if (r.assignment & bit(x)) continue;
          const long long w = alive_index(r.assignment | bit(x));
          if (w < 0) continue;  // target backtracks: zero map
          SaddleType s = classify_saddle(d_, r, alive_[static_cast<std::size_t>(w)], x);
          if (s.kind == SaddleKind::ZeroMap) continue;
          edges.emplace_back(static_cast<std::size_t>(w), std::move(s));
        }
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << r.a); ++s) {
          row.clear();
          for (const auto& [w, saddle] : edges) {
            std::uint64_t img[2];
            const int k = map_wedge(s, saddle, img);
            for (int q = 0; q < k; ++q) row.push_back(static_cast<std::uint32_t>(out.vertex_offset_[w] + img[q]));
          }
          std::sort(row.begin(), row.end());
          // F2: equal terms cancel in pairs.
          std::size_t kept = 0;
          for (std::size_t q = 0; q < row.size();) {
            std::size_t e = q;
            while (e < row.size() && row[e] == row[q]) ++e;
            if ((e - q) % 2 == 1) row[kept++] = row[q];
            q = e;
          }
          part.lengths.push_back(kept);
          part.targets.insert(part.targets.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(kept));
        }
      }
    });
    out.d_offsets_.reserve(out.generators_.size() + 1);
    out.d_offsets_.push_back(0);
    for (const Part& p : parts) {
      for (std::size_t len : p.lengths) out.d_offsets_.push_back(out.d_offsets_.back() + len);
      out.d_targets_.insert(out.d_targets_.end(), p.targets.begin(), p.targets.end());
    }
    if (out.d_offsets_.size() != out.generators_.size() + 1) throw InternalError("differential row count mismatch");
  }

  static void audit(GradedComplex& out) {
    FiltrationStats& st = out.stats_;
    for (std::size_t g = 0; g < out.size(); ++g) {
      for (std::uint32_t t : out.boundary(g)) {
        ++st.entries;
        const int ks = out.gradings_[g].k, kt = out.gradings_[t].k;
        if (kt == ks) ++st.k_preserving;
        else if (kt < ks) ++st.k_decreasing;
        else ++st.k_increasing;
      }
    }
  }

  const TangleDiagram& d_;
  ResolutionMode mode_;
  BuildOptions opts_;
  std::vector<Resolution> alive_;
};

// ---------------------------------------------------------------------------

long long GradedComplex::find(const KhGenerator& g) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), g.vertex);
  if (it == vertices_.end() || *it != g.vertex) return -1;
  const auto t = static_cast<std::size_t>(it - vertices_.begin());
  if (g.wedge >= (std::uint64_t{1} << vertex_circles_[t])) return -1;
  return static_cast<long long>(vertex_offset_[t] + g.wedge);
}

GradingKey GradedComplex::bucket_key(std::size_t g) const {
  const Grading& gr = gradings_[g];
  if (mode_ == ComplexMode::AnnularAssociatedGraded) return {gr.i, gr.j, gr.k};
  return {gr.i, gr.j, std::nullopt};
}

void GradedComplex::rebucket() {
  buckets_.clear();
  local_index_.assign(generators_.size(), 0);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    auto& b = buckets_[bucket_key(g)];
    local_index_[g] = static_cast<std::uint32_t>(b.size());
    b.push_back(static_cast<std::uint32_t>(g));
  }
}

SparseF2Matrix GradedComplex::boundary_block(const GradingKey& from) const {
  GradingKey to = from;
  to.i += 1;
  auto src = buckets_.find(from);
  if (src == buckets_.end()) return {};
  auto dst = buckets_.find(to);
  const std::size_t cols = dst == buckets_.end() ? 0 : dst->second.size();
  SparseF2Matrix m(src->second.size(), cols);
  if (!has_differential()) return m;
  for (std::size_t r = 0; r < src->second.size(); ++r) {
    for (std::uint32_t t : boundary(src->second[r])) {
      if (bucket_key(t) != to)
        throw InternalError("differential leaves bucket " + to_string(from) + " for " + to_string(bucket_key(t)));
      m.flip(r, local_index_[t]);
    }
  }
  return m;
}

std::size_t GradedComplex::square_defects() const {
  if (!has_differential()) return 0;
  std::size_t bad = 0;
  std::vector<std::uint32_t> acc;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    acc.clear();
    for (std::uint32_t t : boundary(g)) {
      auto b = boundary(t);
      acc.insert(acc.end(), b.begin(), b.end());
    }
    std::sort(acc.begin(), acc.end());
    for (std::size_t q = 0; q < acc.size();) {
      std::size_t e = q;
      while (e < acc.size() && acc[e] == acc[q]) ++e;
      if ((e - q) % 2 == 1) {
        ++bad;
        break;
      }
      q = e;
    }
  }
  return bad;
}

GradedComplex enumerate_generators(const TangleDiagram& d, const BuildOptions& opts) {
  return ComplexBuilder(d, ResolutionMode::Tangle, opts).run(false);
}

GradedComplex enumerate_generators(const AnnularDiagram& d, const BuildOptions& opts) {
  return ComplexBuilder(d.core(), ResolutionMode::Annular, opts).run(false);
}

GradedComplex build_differential(const TangleDiagram& d, const BuildOptions& opts) {
  return ComplexBuilder(d, ResolutionMode::Tangle, opts).run(true);
}

GradedComplex build_differential(const AnnularDiagram& d, const BuildOptions& opts) {
  return ComplexBuilder(d.core(), ResolutionMode::Annular, opts).run(true);
}

GradedComplex associated_graded(const GradedComplex& c) {
  if (c.mode() != ComplexMode::AnnularTotal) throw std::invalid_argument("associated_graded needs an AnnularTotal complex");
  GradedComplex out = c;
  out.mode_ = ComplexMode::AnnularAssociatedGraded;
  out.d_targets_.clear();
  out.d_offsets_.assign(1, 0);
  for (std::size_t g = 0; g < c.size(); ++g) {
    for (std::uint32_t t : c.boundary(g)) {
      if (c.gradings_[t].k == c.gradings_[g].k) {
        out.d_targets_.push_back(t);
      } else {
        ++out.stats_.dropped;
        if (c.gradings_[t].k >= c.gradings_[g].k) ++out.stats_.dropped_not_decreasing;
      }
    }
    out.d_offsets_.push_back(out.d_targets_.size());
  }
  if (const std::size_t bad = out.square_defects())
    throw InternalError("associated graded differential does not square to zero on " + std::to_string(bad) + " generators");
  out.rebucket();
  return out;
}

}  // namespace skh
