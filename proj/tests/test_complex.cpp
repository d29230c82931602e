#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "skh/catalog.hpp"
#include "skh/complex.hpp"
#include "skh/error.hpp"
#include "skh/homology.hpp"
#include "skh/random_diagrams.hpp"

using namespace skh;

namespace {

SaddleType saddle(SaddleKind k, std::vector<int> closed_map, int si, int sj, int di, int dj) {
  SaddleType s;
  s.kind = k;
  s.closed_map = std::move(closed_map);
  s.src_i = si;
  s.src_j = sj;
  s.dst_i = di;
  s.dst_j = dj;
  return s;
}

}  // namespace

TEST_CASE("generator enumeration") {
  const GradedComplex id = enumerate_generators(catalog::identity(3));
  REQUIRE(id.size() == 1);
  CHECK(id.gradings()[0] == Grading{0, 0, 0});
  CHECK_FALSE(id.has_differential());

  CHECK(enumerate_generators(catalog::braid(2, {1})).size() == 1);

  const GradedComplex u = enumerate_generators(catalog::cupcap_unknot());
  REQUIRE(u.size() == 2);
  CHECK(u.gradings()[0].j == 1);
  CHECK(u.gradings()[1].j == -1);

  CHECK(enumerate_generators(catalog::turnback()).size() == 0);
}

TEST_CASE("braid words have a single surviving generator") {
  Rng rng(4);
  for (int n = 0; n < 40; ++n) CHECK(enumerate_generators(random_braid(rng, 5, 10)).size() == 1);
}

TEST_CASE("crossing cap") {
  std::vector<int> word(25, 1);
  CHECK_THROWS_AS(enumerate_generators(catalog::braid(2, word)), SizeCapError);
  BuildOptions small;
  small.max_crossings = 2;
  CHECK_THROWS_AS(build_differential(catalog::trefoil_cut(), small), SizeCapError);
}

TEST_CASE("unbalanced tangles are refused") {
  CHECK_THROWS_AS(build_differential(parse_tangle("strands 1\nCUP 1\n")), IncompatibleInput);
}

TEST_CASE("edge map rules") {
  std::uint64_t out[2];
  // merge of two circles 0 and 1 into circle 0; circle 2 becomes 1
  const SaddleType m = saddle(SaddleKind::MergeClosedClosed, {-1, -1, 1}, 0, 1, 0, -1);
  CHECK(map_wedge(0b000, m, out) == 1);
  CHECK(out[0] == 0b00);
  CHECK(map_wedge(0b001, m, out) == 1);
  CHECK(out[0] == 0b01);
  CHECK(map_wedge(0b110, m, out) == 1);
  CHECK(out[0] == 0b11);
  CHECK(map_wedge(0b011, m, out) == 0);

  const SaddleType ma = saddle(SaddleKind::MergeClosedArc, {-1, 0}, 0, -1, -1, -1);
  CHECK(map_wedge(0b01, ma, out) == 0);
  CHECK(map_wedge(0b10, ma, out) == 1);
  CHECK(out[0] == 0b1);

  // split of circle 0 into circles 0 and 1
  const SaddleType sp = saddle(SaddleKind::SplitIntoClosedClosed, {-1}, 0, -1, 0, 1);
  CHECK(map_wedge(0b0, sp, out) == 2);
  CHECK(out[0] == 0b01);
  CHECK(out[1] == 0b10);
  CHECK(map_wedge(0b1, sp, out) == 1);
  CHECK(out[0] == 0b11);

  // an arc splits off circle 0
  const SaddleType sa = saddle(SaddleKind::SplitIntoClosedArc, {}, -1, -1, 0, -1);
  CHECK(map_wedge(0, sa, out) == 1);
  CHECK(out[0] == 0b1);

  CHECK(map_wedge(0, SaddleType{}, out) == 0);

  CubeEdge e{0, 1, sp};
  const auto img = edge_map({0, 0}, e);
  REQUIRE(img.size() == 2);
  CHECK(img[0] == KhGenerator{1, 0b01});
  CHECK_THROWS_AS(edge_map({2, 0}, e), std::invalid_argument);
}

TEST_CASE("differential squares to zero, raises i and keeps j") {
  Rng rng(12);
  for (int n = 0; n < 60; ++n) {
    const TangleDiagram d = n % 2 ? random_tangle(rng, 7) : random_braid(rng, 4, 8);
    const GradedComplex c = build_differential(d);
    CHECK(c.square_defects() == 0);
    for (std::size_t g = 0; g < c.size(); ++g) {
      for (std::uint32_t t : c.boundary(g)) {
        CHECK(c.gradings()[t].i == c.gradings()[g].i + 1);
        CHECK(c.gradings()[t].j == c.gradings()[g].j);
      }
    }
    // generator count is the sum of 2^a over surviving vertices
    std::size_t expect = 0;
    for (int a : c.vertex_circles()) expect += std::size_t{1} << a;
    CHECK(c.size() == expect);
  }
}

TEST_CASE("annular complexes: filtration and support") {
  Rng rng(13);
  for (int n = 0; n < 60; ++n) {
    const TangleDiagram t = n % 2 ? random_tangle(rng, 6) : random_braid(rng, 4, 7);
    const AnnularDiagram a = annular_closure(t);
    const GradedComplex full = build_differential(a);
    CHECK(full.mode() == ComplexMode::AnnularTotal);
    const int m = a.cut_points();
    for (std::size_t g = 0; g < full.size(); ++g) {
      const int k = full.gradings()[g].k;
      CHECK(std::abs(k) <= m);
      CHECK((k - m) % 2 == 0);
      for (std::uint32_t x : full.boundary(g)) CHECK(full.gradings()[x].k <= k);
    }
    CHECK(full.filtration().k_increasing == 0);
    CHECK(full.filtration().entries == full.filtration().k_preserving + full.filtration().k_decreasing);

    const GradedComplex gr = associated_graded(full);
    CHECK(gr.mode() == ComplexMode::AnnularAssociatedGraded);
    CHECK(gr.square_defects() == 0);
    CHECK(gr.filtration().dropped == full.filtration().k_decreasing);
    CHECK(gr.filtration().dropped_not_decreasing == 0);
    for (std::size_t g = 0; g < gr.size(); ++g) {
      for (std::uint32_t x : gr.boundary(g)) CHECK(gr.gradings()[x].k == gr.gradings()[g].k);
    }
  }
  CHECK_THROWS_AS(associated_graded(build_differential(catalog::identity(1))), std::invalid_argument);
}

TEST_CASE("identity closure: one essential circle") {
  const GradedComplex c = associated_graded(build_differential(annular_closure(catalog::identity(1))));
  REQUIRE(c.size() == 2);
  CHECK(c.gradings()[0].k == 1);
  CHECK(c.gradings()[1].k == -1);
  CHECK(c.buckets().size() == 2);
}

TEST_CASE("results do not depend on the thread count") {
  Rng rng(21);
  for (int n = 0; n < 15; ++n) {
    const TangleDiagram t = random_tangle(rng, 8);
    BuildOptions one, many;
    many.threads = 6;
    const GradedComplex a = build_differential(t, one), b = build_differential(t, many);
    REQUIRE(a.size() == b.size());
    CHECK(a.generators() == b.generators());
    for (std::size_t g = 0; g < a.size(); ++g) {
      const auto x = a.boundary(g), y = b.boundary(g);
      CHECK(std::equal(x.begin(), x.end(), y.begin(), y.end()));
    }
  }
}

TEST_CASE("find and bucket blocks") {
  const GradedComplex c = build_differential(catalog::trefoil_cut());
  for (std::size_t g = 0; g < c.size(); ++g) CHECK(c.find(c.generators()[g]) == static_cast<long long>(g));
  CHECK(c.find({7, 100}) == -1);
  std::size_t entries = 0;
  for (const auto& [key, gens] : c.buckets()) entries += c.boundary_block(key).nonzeros();
  std::size_t direct = 0;
  for (std::size_t g = 0; g < c.size(); ++g) direct += c.boundary(g).size();
  CHECK(entries == direct);
}
