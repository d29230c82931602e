#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skh/catalog.hpp"
#include "skh/error.hpp"
#include "skh/invariants.hpp"
#include "skh/oracle.hpp"
#include "skh/random_diagrams.hpp"
#include "skh/verify.hpp"

using namespace skh;

TEST_CASE("skh of tangles") {
  CHECK(skh_tangle(catalog::braid(3, {1, 2, 1})).total() == 1);
  CHECK(skh_tangle(catalog::turnback()).total() == 0);
  CHECK(skh_tangle(compose(catalog::identity(1), catalog::trefoil_cut())).total() == 3);
  CHECK_THROWS_AS(skh_tangle(parse_tangle("strands 1\nCUP 1\n")), IncompatibleInput);
}

TEST_CASE("annular skh") {
  const GradedDims core = skh_annular(annular_closure(catalog::identity(1)));
  CHECK(core.total() == 2);
  CHECK(core.slice_k(1).total() == 1);
  CHECK(core.slice_k(-1).total() == 1);

  CHECK(skh_annular(annular_closure(catalog::braid(2, {1}))).slice_k(2).total() == 1);

  const GradedDims u = skh_annular(annular_closure(catalog::cupcap_unknot()));
  CHECK(u.total() == 2);
  CHECK(u.slice_k(0).total() == 2);
}

TEST_CASE("reduced Khovanov homology") {
  CHECK(khr_link(catalog::unknot_cut()).total() == 1);
  CHECK(khr_link(catalog::trefoil_cut()) == oracle::oracle_homology(catalog::trefoil_cut()));
  CHECK(khr_link(catalog::trefoil_cut()).total() == 3);
  CHECK(khr_link(catalog::figure_eight_cut()).total() == 5);
  CHECK_THROWS_AS(khr_link(catalog::identity(2)), IncompatibleInput);
}

TEST_CASE("braid detection") {
  CHECK(detect_braid(catalog::braid(3, {-1, 2})).is_braid_homology);
  const BraidVerdict k = detect_braid(catalog::trefoil_cut());
  CHECK_FALSE(k.is_braid_homology);
  CHECK(k.total_dim == 3);
  // clasp then cap: the two strands hook and the right one turns back
  const BraidVerdict c = detect_braid(parse_tangle("strands 2\nX+ 1\nX+ 1\nCAP 1\nCUP 1\n"));
  CHECK_FALSE(c.is_braid_homology);
  CHECK(c.total_dim % 2 == 0);
}

TEST_CASE("parity law") {
  CHECK(parity_check(catalog::braid(3, {1, 2})).passed);
  const ParityReport split = parity_check(parse_tangle("strands 1\nCUP 2\nCAP 2\n"));
  CHECK(split.passed);
  CHECK(split.total == 2);
  CHECK_FALSE(split.string_link);
  const ParityReport t = parity_check(catalog::turnback());
  CHECK(t.passed);
  CHECK(t.total == 0);
}

TEST_CASE("connected sums") {
  const TangleDiagram star = knot_star(catalog::trefoil_cut(), 3);
  CHECK(star.n_bottom() == 3);
  CHECK(star.crossing_count() == 3);
  CHECK_THROWS_AS(knot_star(catalog::identity(2), 2), IncompatibleInput);

  CHECK(tensor_check(catalog::identity(1), catalog::unknot_cut()).passed);
  const TensorReport a = tensor_check(catalog::identity(1), catalog::trefoil_cut());
  CHECK(a.passed);
  CHECK(a.lhs.total() == 3);
  const TensorReport b = tensor_check(catalog::braid(2, {1}), catalog::trefoil_cut());
  CHECK(b.passed);
  CHECK(b.lhs.total() == 3);
  REQUIRE(b.shift.has_value());
  CHECK(*b.shift == std::pair{0, 0});
}

TEST_CASE("cut law") {
  const CutReport b = cut_check(annular_closure(catalog::braid(3, {1, -2, 1})));
  CHECK(b.passed);
  CHECK(b.tangle.total() == 1);
  CHECK(b.j_shift == 3);

  const CutReport k = cut_check(annular_closure(catalog::trefoil_cut()));
  CHECK(k.passed);
  CHECK(k.annular_top.total() == 3);

  const CutReport u = cut_check(annular_closure(catalog::cupcap_unknot()));
  CHECK(u.passed);
  CHECK(u.tangle.total() == 2);
  CHECK(u.m == 0);
}

TEST_CASE("spectral bound") {
  const SpectralReport id = spectral_bound_check(annular_closure(catalog::identity(1)));
  CHECK(id.passed);
  CHECK(id.collapsed == id.total);

  const SpectralReport hopf = spectral_bound_check(annular_closure(catalog::braid(2, {1, 1})));
  CHECK(hopf.passed);
  CHECK(hopf.total == oracle::oracle_total_homology(annular_closure(catalog::braid(2, {1, 1}))));

  const SpectralReport s1 = spectral_bound_check(annular_closure(catalog::braid(2, {1})));
  CHECK(s1.passed);
  CHECK(s1.total.total() == 2);
  CHECK(s1.collapsed.total() >= 2);
}

TEST_CASE("kh_total of a planar link") {
  CHECK(kh_total(annular_closure(catalog::cupcap_unknot())).total() == 2);
}

TEST_CASE("verify suites") {
  for (Suite s : {Suite::Parity, Suite::Tensor, Suite::Cut, Suite::Moves, Suite::Oracle, Suite::Filtration}) {
    const SuiteReport r = run_suite(s, 2024, 25);
    CHECK_MESSAGE(r.ok(), suite_name(s), "\n", r.failure);
    CHECK(r.passed == 25);
  }
  CHECK(parse_suite("cut") == Suite::Cut);
  CHECK_FALSE(parse_suite("nope").has_value());
}

TEST_CASE("suites are reproducible") {
  const SuiteReport a = run_suite(Suite::Filtration, 77, 20), b = run_suite(Suite::Filtration, 77, 20);
  CHECK(a.filtration.entries == b.filtration.entries);
  CHECK(a.filtration.dropped == b.filtration.dropped);
}
