#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skh/catalog.hpp"
#include "skh/error.hpp"
#include "skh/invariants.hpp"
#include "skh/moves.hpp"
#include "skh/random_diagrams.hpp"

using namespace skh;

namespace {

MorseMove mv(MoveKind k, std::size_t index, int pos = 1, SliceKind x = SliceKind::CrossLOver, bool left = false) {
  MorseMove m;
  m.kind = k;
  m.index = index;
  m.pos = pos;
  m.crossing = x;
  m.left = left;
  return m;
}

void round_trip(const TangleDiagram& d, const MorseMove& m) {
  const TangleDiagram e = apply_move(d, m);
  const TangleDiagram back = apply_move(e, inverse_move(d, m));
  CHECK(back.slices() == d.slices());
  if (d.n_bottom() == d.n_top()) CHECK(skh_tangle(e) == skh_tangle(d));
}

}  // namespace

TEST_CASE("R2 insert on the identity") {
  const TangleDiagram d = apply_move(catalog::identity(2), mv(MoveKind::R2Insert, 0, 1));
  CHECK(d.crossing_count() == 2);
  CHECK(d.n_plus() == 1);
  CHECK(d.n_minus() == 1);
  CHECK(skh_tangle(d) == skh_tangle(catalog::identity(2)));
  CHECK_THROWS_AS(apply_move(catalog::identity(1), mv(MoveKind::R2Insert, 0, 1)), MoveError);
}

TEST_CASE("zigzag cancellation straightens a strand") {
  const TangleDiagram z = parse_tangle("strands 1\nCUP 2\nCAP 1\n");
  const TangleDiagram s = apply_move(z, mv(MoveKind::ZigzagRemove, 0));
  CHECK(s.slices().empty());
  CHECK(s == catalog::identity(1));
  const TangleDiagram l = apply_move(catalog::identity(1), mv(MoveKind::ZigzagInsert, 0, 1, SliceKind::CrossLOver, true));
  CHECK(l.slices() == std::vector<MorseSlice>{{SliceKind::Cup, 1, CupDir::RightToLeft}, {SliceKind::Cap, 2}});
  CHECK_THROWS_AS(apply_move(catalog::cupcap_unknot(), mv(MoveKind::ZigzagRemove, 0)), MoveError);
}

TEST_CASE("R1 kinks keep the graded table") {
  for (SliceKind x : {SliceKind::CrossLOver, SliceKind::CrossROver}) {
    for (bool left : {false, true}) {
      const TangleDiagram k = apply_move(catalog::identity(1), mv(MoveKind::R1Insert, 0, 1, x, left));
      CHECK(k.crossing_count() == 1);
      CHECK(skh_tangle(k) == skh_tangle(catalog::identity(1)));
      round_trip(catalog::identity(1), mv(MoveKind::R1Insert, 0, 1, x, left));
    }
  }
  // and on a strand of a knotted tangle
  round_trip(catalog::trefoil_cut(), mv(MoveKind::R1Insert, 2, 2, SliceKind::CrossROver, false));
  CHECK_THROWS_AS(apply_move(catalog::identity(1), mv(MoveKind::R1Remove, 0)), MoveError);
}

TEST_CASE("R3 slides") {
  const TangleDiagram d = catalog::braid(3, {1, 2, 1});
  const TangleDiagram e = apply_move(d, mv(MoveKind::R3, 0));
  CHECK(e.slices() == catalog::braid(3, {2, 1, 2}).slices());
  round_trip(d, mv(MoveKind::R3, 0));
  round_trip(catalog::braid(3, {1, -2, -1}), mv(MoveKind::R3, 0));
  round_trip(catalog::braid(3, {-2, 1, 2}), mv(MoveKind::R3, 0));
  CHECK_THROWS_AS(apply_move(catalog::braid(3, {1, -2, 1}), mv(MoveKind::R3, 0)), MoveError);
  CHECK_THROWS_AS(apply_move(catalog::braid(3, {1, 1, 1}), mv(MoveKind::R3, 0)), MoveError);
}

TEST_CASE("commuting distant slices") {
  const TangleDiagram d = catalog::braid(4, {1, 3});
  CHECK(apply_move(d, mv(MoveKind::Commute, 0)).slices() == catalog::braid(4, {3, 1}).slices());
  CHECK_THROWS_AS(apply_move(catalog::braid(3, {1, 2}), mv(MoveKind::Commute, 0)), MoveError);
  // a cup to the right of a crossing shifts nothing; a cup to its left shifts it
  const TangleDiagram c = parse_tangle("strands 2\nX+ 1\nCUP 1\n");
  CHECK(apply_move(c, mv(MoveKind::Commute, 0)).slices()[1].pos == 3);
  round_trip(c, mv(MoveKind::Commute, 0));
  // cap then cup in the same gap: either side is legal and the inverse restores it
  const TangleDiagram t = parse_tangle("strands 3\nCAP 2\nCUP 2\n");
  for (bool left : {false, true}) round_trip(t, mv(MoveKind::Commute, 0, 1, SliceKind::CrossLOver, left));
}

TEST_CASE("random move sequences preserve homology and invert") {
  Rng rng(99);
  int applied = 0;
  for (int n = 0; n < 150; ++n) {
    const TangleDiagram d = n % 2 ? random_tangle(rng, 5) : random_braid(rng, 4, 5);
    for (int attempt = 0; attempt < 100; ++attempt) {
      MorseMove m;
      m.kind = static_cast<MoveKind>(std::uniform_int_distribution<int>(0, 7)(rng));
      m.index = std::uniform_int_distribution<std::size_t>(0, d.slices().size())(rng);
      m.pos = std::uniform_int_distribution<int>(1, std::max(1, d.skeleton().widths[m.index]))(rng);
      m.crossing = rng() % 2 ? SliceKind::CrossLOver : SliceKind::CrossROver;
      m.left = rng() % 2;
      try {
        (void)apply_move(d, m);
      } catch (const MoveError&) {
        continue;
      }
      round_trip(d, m);
      ++applied;
      break;
    }
  }
  CHECK(applied > 100);
}

TEST_CASE("describe") {
  CHECK(describe(mv(MoveKind::R2Insert, 3, 2, SliceKind::CrossROver)) == "R2-insert at slice 3 pos 2 X-");
  CHECK(describe(mv(MoveKind::Commute, 1)) == "commute at slice 1");
}
