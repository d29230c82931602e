#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skh/catalog.hpp"
#include "skh/diagram.hpp"
#include "skh/error.hpp"
#include "skh/random_diagrams.hpp"

using namespace skh;

TEST_CASE("parse: identity and single crossing") {
  const TangleDiagram id = parse_tangle("strands 2\n");
  CHECK(id.n_bottom() == 2);
  CHECK(id.n_top() == 2);
  CHECK(id.slices().empty());
  CHECK(id.n_plus() == 0);
  CHECK(id.n_minus() == 0);

  const TangleDiagram x = parse_tangle("tangle v1\nstrands 2\nX+ 1\n");
  CHECK(x.crossing_count() == 1);
  CHECK(x.n_plus() == 1);
  CHECK(x.n_minus() == 0);

  const TangleDiagram y = parse_tangle("strands 2\nX- 1\n");
  CHECK(y.n_minus() == 1);
}

TEST_CASE("parse: cup-cap unknot") {
  const TangleDiagram u = parse_tangle("strands 0\nCUP 1\nCAP 1\n");
  CHECK(u.n_bottom() == 0);
  CHECK(u.n_top() == 0);
  CHECK(u.balanced());
  const auto comps = u.components();
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].closed());
}

TEST_CASE("parse: comments, blank lines and orientation") {
  const TangleDiagram d = parse_tangle("# a comment\n\ntangle v1\nstrands 2   # two strands\norient u d\nCAP 1\nCUP 1\n");
  CHECK(d.orientation_declared());
  CHECK(d.bottom_up() == std::vector<bool>{true, false});
  CHECK(d.top_up() == std::vector<bool>{false, true});
}

TEST_CASE("parse errors carry line and column") {
  auto err = [](const char* text) -> std::pair<int, int> {
    try {
      (void)parse_input(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {-1, -1};
  };
  CHECK(err("strands 2\nX+ 2\n") == std::pair{2, 4});
  CHECK(err("strands 2\nFOO 1\n") == std::pair{2, 1});
  CHECK(err("strands 2\nX+ one\n") == std::pair{2, 4});
  CHECK(err("strands 1\nCAP 1\n") == std::pair{2, 5});
  CHECK(err("X+ 1\n") == std::pair{1, 1});
  CHECK(err("strands 2\norient u x\n") == std::pair{2, 10});
  CHECK(err("strands 2\nX+ 1\norient u u\n") == std::pair{3, 1});
  CHECK(err("strands 2\nclosure annular\nX+ 1\n") == std::pair{3, 1});
  CHECK(err("strands 1\nCUP 1\nclosure annular\n").first == 3);
  CHECK(err("") == std::pair{1, 1});
  CHECK(err("strands 2\ntangle v1\n").first == 2);
}

TEST_CASE("inconsistent declared orientation is rejected") {
  // a cap joins two strands that both point up
  CHECK_THROWS_AS(parse_tangle("strands 2\norient u u\nCAP 1\nCUP 1\n"), ParseError);
  CHECK_THROWS_AS(TangleDiagram::make(2, {{SliceKind::Cap, 1}, {SliceKind::Cup, 1}}, std::vector<bool>{true, true}),
                  DiagramError);
}

TEST_CASE("make rejects out-of-range positions") {
  CHECK_THROWS_AS(TangleDiagram::make(2, {{SliceKind::CrossLOver, 2}}), DiagramError);
  CHECK_THROWS_AS(TangleDiagram::make(2, {{SliceKind::Cup, 4}}), DiagramError);
  CHECK_NOTHROW(TangleDiagram::make(2, {{SliceKind::Cup, 3}}));
  CHECK_THROWS_AS(TangleDiagram::make(-1, {}), DiagramError);
}

TEST_CASE("crossing signs follow local strand directions") {
  CHECK(parse_tangle("strands 2\norient u u\nX+ 1\n").n_plus() == 1);
  CHECK(parse_tangle("strands 2\norient d d\nX+ 1\n").n_plus() == 1);
  CHECK(parse_tangle("strands 2\norient u d\nX+ 1\n").n_minus() == 1);
  CHECK(parse_tangle("strands 2\norient d u\nX- 1\n").n_plus() == 1);
  // every crossing of a figure-eight has the opposite sign to its neighbor
  const TangleDiagram f = catalog::figure_eight_cut();
  CHECK(f.n_plus() == 2);
  CHECK(f.n_minus() == 2);
  CHECK(catalog::trefoil_cut().n_plus() == 3);
}

TEST_CASE("validate") {
  const ValidationReport id = validate(catalog::identity(3));
  CHECK(id.ok());
  CHECK(id.balanced);
  CHECK_FALSE(id.has_closed_components);
  CHECK(id.is_string_link_shape);

  const ValidationReport u = validate(catalog::cupcap_unknot());
  CHECK(u.balanced);
  CHECK(u.has_closed_components);
  CHECK_FALSE(u.is_string_link_shape);

  const ValidationReport ub = validate(parse_tangle("strands 1\nCUP 1\n"));
  CHECK_FALSE(ub.ok());
  CHECK_FALSE(ub.balanced);
  REQUIRE(ub.errors.size() == 1);
  CHECK(ub.errors[0].code == "unbalanced");

  CHECK_FALSE(validate(catalog::turnback()).is_string_link_shape);
  CHECK(is_string_link(catalog::trefoil_cut()));
  CHECK_FALSE(is_string_link(catalog::turnback()));
}

TEST_CASE("compose") {
  CHECK(compose(catalog::identity(2), catalog::identity(2)) == catalog::identity(2));
  const TangleDiagram pair = compose(catalog::braid(2, {1}), catalog::braid(2, {-1}));
  CHECK(pair.crossing_count() == 2);
  CHECK(pair.n_plus() == 1);
  CHECK(pair.n_minus() == 1);
  CHECK_THROWS_AS(compose(catalog::identity(2), catalog::identity(3)), DiagramError);

  const TangleDiagram tied = compose(catalog::identity(1), catalog::trefoil_cut());
  CHECK(tied.n_bottom() == 1);
  CHECK(tied.n_top() == 1);
  CHECK(tied.crossing_count() == 3);
}

TEST_CASE("compose is associative") {
  Rng rng(17);
  for (int n = 0; n < 50; ++n) {
    const TangleDiagram a = random_braid(rng, 3, 4);
    const int w = a.n_top();
    const TangleDiagram b = TangleDiagram::make(w, random_braid(rng, w, 4).slices());
    const TangleDiagram c = TangleDiagram::make(w, {{SliceKind::Cup, 1}, {SliceKind::Cap, 2}});
    CHECK(compose(compose(a, b), c).slices() == compose(a, compose(b, c)).slices());
  }
}

TEST_CASE("annular closure") {
  const AnnularDiagram core = annular_closure(catalog::identity(1));
  CHECK(core.cut_points() == 1);
  const AnnularDiagram s1 = annular_closure(catalog::braid(2, {1}));
  CHECK(s1.cut_points() == 2);
  CHECK(s1.core().crossing_count() == 1);
  CHECK(annular_closure(catalog::cupcap_unknot()).cut_points() == 0);
  CHECK_THROWS_AS(annular_closure(parse_tangle("strands 1\nCUP 1\n")), DiagramError);
  // cutting the closure recovers the tangle
  CHECK(annular_closure(catalog::braid(3, {1, -2})).core().slices() == catalog::braid(3, {1, -2}).slices());
}

TEST_CASE("closure orients top arcs through the cut") {
  // the tangle alone orients the top arc from its cup; the closure must reverse it
  const AnnularDiagram a = parse_annular("strands 2\nCAP 1\nCUP 1\nclosure annular\n");
  const auto& d = a.core();
  CHECK(d.top_up() == d.bottom_up());
}

TEST_CASE("text round trip") {
  Rng rng(3);
  for (int n = 0; n < 200; ++n) {
    const TangleDiagram d = random_tangle(rng, 6);
    const ParsedInput back = parse_input(to_text(d));
    CHECK(back.diagram == d);
    CHECK(back.diagram.slices() == d.slices());
    CHECK_FALSE(back.annular);
    if (d.balanced()) {
      const AnnularDiagram a = annular_closure(d);
      const ParsedInput ab = parse_input(to_text(a));
      CHECK(ab.annular);
      CHECK(annular_closure(ab.diagram).core() == a.core());
    }
  }
}

TEST_CASE("clockwise cups survive the text format") {
  const TangleDiagram d = parse_tangle("strands 0\nCUP 1 cw\nCAP 1\nCUP 1\nX+ 1\nX+ 1\nCAP 1\n");
  CHECK(d.slices()[0].cup_dir == CupDir::RightToLeft);
  CHECK(to_text(d).find("CUP 1 cw") != std::string::npos);
  CHECK(parse_tangle(to_text(d)) == d);
  CHECK_THROWS_AS(parse_tangle("strands 0\nCUP 1 up\nCAP 1\n"), ParseError);
  CHECK_THROWS_AS(parse_tangle("strands 0\nCUP 1\nCAP 1 cw\n"), ParseError);
}
