#include "fillkit/braid.hpp"
#include "fillkit/factorization.hpp"
#include "fillkit/mcg.hpp"

#include "doctest.h"

using namespace fillkit;
using namespace fillkit::mcg;
using surface::Surface;

TEST_CASE("homology representation") {
  const Surface& s = Surface::get("S1_3");
  CHECK(homology_rep(s, {}) == intlinalg::IntMatrix::identity(4));
  CHECK(homology_rep(s, parse_word("d1")) == intlinalg::IntMatrix::identity(4));
  const Word star = parse_word("a1 a2 a3 b2 a1 a2 a3 b2 a1 a2 a3 b2");
  CHECK(homology_rep(s, star) == homology_rep(s, parse_word("d1 d2 d3")));
  // a hand-built transvection for t_b2 acting on a1: a1 + <b2, a1> b2 = a1 + b2
  auto m = homology_rep(s, parse_word("b2"));
  CHECK(m.apply(s.base("a1").cls) == IntVector{Integer(1), Integer(0), Integer(0), Integer(1)});
}

TEST_CASE("homology-based separator") {
  const Surface& s = Surface::get("S1_3");
  CHECK(necessary_distinct(s, parse_word("b2"), {}) == Distinctness::distinct);
  CHECK(necessary_distinct(s, parse_word("d1"), {}) == Distinctness::inconclusive);
  CHECK(necessary_distinct(s, parse_word("a1"), parse_word("a2")) == Distinctness::distinct);
  CHECK(necessary_distinct(s, parse_word("a1 a2"), parse_word("a2 a1")) == Distinctness::inconclusive);
  // on S1_1 the free-group action sees the boundary twist
  CHECK(necessary_distinct(Surface::get("S1_1"), parse_word("d"), {}) == Distinctness::distinct);
}

TEST_CASE("B_3 dictionary") {
  const Surface& s = Surface::get("S1_1");
  CHECK(to_b3(s, parse_word("x y x")) == braid::BraidWord(3, {1, 2, 1}));
  CHECK(braid::braid_equal(to_b3(s, parse_word("x y x")), to_b3(s, parse_word("y x y"))));
  CHECK(braid::braid_equal(to_b3(s, parse_word("{x}y")), braid::BraidWord(3, {1, 2, -1})));
  CHECK_THROWS(to_b3(Surface::get("S1_3"), parse_word("a1")));
}

TEST_CASE("the 2-chain relation on S1_1 through the free group") {
  const Surface& s = Surface::get("S1_1");
  const Word chain = parse_word("x y x y x y x y x y x y");
  CHECK(pi1_action(s, chain) == pi1_action(s, parse_word("d")));
  CHECK(braid::braid_equal(to_b3(s, chain), to_b3(s, parse_word("d"))));
  CHECK(pi1_action(s, parse_word("x y x")) == pi1_action(s, parse_word("y x y")));
  CHECK(pi1_action(s, parse_word("x y")) != pi1_action(s, parse_word("y x")));
}

TEST_CASE("capped P_2 and capped phi have the same B_3 image") {
  auto cap2 = [](const factorization::PositiveFactorization& f) {
    return factorization::cap_factorization(factorization::cap_factorization(f, 3), 1);
  };
  const Surface& s = Surface::get("S1_1");
  auto p2 = cap2(factorization::generate_Pn(2).factorization);
  auto phi = cap2(factorization::phi());
  CHECK(braid::braid_equal(to_b3(s, p2.as_word()), to_b3(s, phi.as_word())));
  CHECK(pi1_action(s, p2.as_word()) == pi1_action(s, phi.as_word()));
}

TEST_CASE("lantern relation against pure braids in B_3") {
  // inner boundaries become punctures; c_ij twists become the pure braids A_ij
  braid::BraidWord a12(3, {1, 1}), a13(3, {2, 1, 1, -2}), a23(3, {2, 2}), full(3, {1, 2, 1, 2, 1, 2});
  CHECK(braid::braid_equal(a12 * a13 * a23, full));
  const Surface& s = Surface::get("S0_4");
  CHECK(pi1_action(s, parse_word("c1_2 c1_3 c2_3")) == pi1_action(s, parse_word("d1 d2 d3 d4")));
}

TEST_CASE("curve words on S1_1") {
  const Surface& s = Surface::get("S1_1");
  // t_x^-1 sends y to y x
  CHECK(curve_word(s, parse_curve("{x^-1}y")) == presentations::FreeWord::from_indices({2, 1}));
  CHECK(curve_word(s, parse_curve("d")) == presentations::FreeWord::from_indices({1, 2, -1, -2}));
}
