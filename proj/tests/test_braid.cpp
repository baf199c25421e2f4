#include "fillkit/braid.hpp"

#include "doctest.h"

#include <gmpxx.h>

#include <vector>

using namespace fillkit;
using namespace fillkit::braid;
using presentations::FreeWord;

namespace {

// Unreduced Burau matrix at t = 2 over Q; a homomorphism, so equal braids
// have equal images.
using Q = std::vector<std::vector<mpq_class>>;

Q burau(const BraidWord& b) {
  const int n = b.strands;
  Q m(n, std::vector<mpq_class>(n, 0));
  for (int k = 0; k < n; ++k) m[k][k] = 1;
  const mpq_class t = 2, ti = mpq_class(1, 2);
  for (int s : b.letters) {
    const int i = std::abs(s) - 1;
    Q g(n, std::vector<mpq_class>(n, 0));
    for (int k = 0; k < n; ++k) g[k][k] = 1;
    if (s > 0) {
      g[i][i] = 1 - t, g[i][i + 1] = t, g[i + 1][i] = 1, g[i + 1][i + 1] = 0;
    } else {
      g[i][i] = 0, g[i][i + 1] = 1, g[i + 1][i] = ti, g[i + 1][i + 1] = 1 - ti;
    }
    Q r(n, std::vector<mpq_class>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k) r[a][c] += m[a][k] * g[k][c];
    m = r;
  }
  return m;
}

FreeWord ordered_product(const std::vector<FreeWord>& images) {
  FreeWord p;
  for (const auto& w : images) p = p * w;
  return p;
}

}  // namespace

TEST_CASE("Artin action of one generator") {
  auto a = artin_action(BraidWord(2, {1}));
  CHECK(a[0] == FreeWord::from_indices({1, 2, -1}));
  CHECK(a[1] == FreeWord::from_indices({1}));
  auto b = artin_action(BraidWord(2, {-1}));
  CHECK(b[0] == FreeWord::from_indices({2}));
  CHECK(b[1] == FreeWord::from_indices({-2, 1, 2}));
  CHECK(artin_action(BraidWord(3, {})) == artin_action(BraidWord(3, {2, -2})));
}

TEST_CASE("the product x_1 ... x_n is fixed") {
  const BraidWord b(4, {1, -3, 2, 2, -1, 3, -2});
  CHECK(ordered_product(artin_action(b)) == FreeWord::from_indices({1, 2, 3, 4}));
}

TEST_CASE("braid relations checked against Burau and permutations") {
  const BraidWord r1(3, {1, 2, 1}), r2(3, {2, 1, 2});
  CHECK(braid_equal(r1, r2));
  CHECK(burau(r1) == burau(r2));
  CHECK(braid_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK_FALSE(braid_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
  CHECK(burau(BraidWord(3, {1, 2})) != burau(BraidWord(3, {2, 1})));
  // sigma_1^2 is pure but nontrivial
  CHECK(permutation(BraidWord(2, {1, 1})) == std::vector<int>{0, 1});
  CHECK_FALSE(braid_equal(BraidWord(2, {1, 1}), BraidWord(2, {})));
  // the full twist is central
  const BraidWord full(3, {1, 2, 1, 2, 1, 2});
  CHECK(braid_equal(full * BraidWord(3, {1}), BraidWord(3, {1}) * full));
  CHECK(burau(full * BraidWord(3, {2})) == burau(BraidWord(3, {2}) * full));
}

TEST_CASE("words validate their strand count") {
  CHECK_THROWS(BraidWord(3, {3}));
  CHECK_THROWS(BraidWord(3, {0}));
  CHECK_THROWS(BraidWord(1, {}));
  CHECK_THROWS(BraidWord(3, {1}) * BraidWord(4, {1}));
  CHECK(BraidWord(3, {1, -2, 2, -1}).reduced().letters.empty());
}

TEST_CASE("braided surfaces without bands") {
  BandFactorization e{3, {}};
  auto inv = surface_invariants(e);
  CHECK(inv.euler == 3);
  CHECK(inv.surface_components == 3);
  CHECK(inv.boundary_link_components == 3);
  CHECK(e.product().letters.empty());
}

TEST_CASE("small braided surfaces") {
  // one band: a disk bounded by an unknot
  CHECK(surface_invariants({2, {{BraidWord(2, {}), 1}}}) == SurfaceInvariants{1, 1, 1});
  // two parallel bands: the Hopf annulus
  CHECK(surface_invariants({2, {{BraidWord(2, {}), 1}, {BraidWord(2, {}), 1}}}) == SurfaceInvariants{0, 1, 2});
  // three bands on two strands: the trefoil fiber
  CHECK(surface_invariants({2, std::vector<Band>(3, {BraidWord(2, {}), 1})}) == SurfaceInvariants{-1, 1, 1});
  // a conjugated band connects strands 1 and 3
  BandFactorization c{3, {{BraidWord(3, {2}), 1}}};
  CHECK(surface_invariants(c) == SurfaceInvariants{2, 2, 2});
  CHECK(permutation(c.product()) == std::vector<int>{2, 1, 0});
}

TEST_CASE("appending generator bands") {
  BandFactorization b{4, {{BraidWord(4, {1}), 2}}};
  CHECK(append_positive_generator_powers(b, 0) == b);
  auto one = append_positive_generator_powers(b, 1);
  CHECK(one.bands.size() == 2);
  CHECK(one.bands.back() == Band{BraidWord(4, {}), 2});
  auto three = append_positive_generator_powers(b, 3, 1);
  CHECK(three.bands.size() == 4);
  CHECK(braid_equal(three.product(), b.product() * BraidWord(4, {1, 1, 1})));
  CHECK(surface_invariants(three).euler == surface_invariants(b).euler - 3);
  CHECK_THROWS(append_positive_generator_powers(b, -1));
  CHECK_THROWS(append_positive_generator_powers(b, 1, 4));
}

TEST_CASE("band Hurwitz moves") {
  BandFactorization b{3, {{BraidWord(3, {}), 1}, {BraidWord(3, {}), 2}, {BraidWord(3, {-1}), 2}}};
  for (std::size_t p = 1; p < b.bands.size(); ++p) {
    for (auto d : {Direction::forward, Direction::backward}) {
      auto m = hurwitz_move(b, p, d);
      CHECK(braid_equal(m.product(), b.product()));
      CHECK(surface_invariants(m) == surface_invariants(b));
      auto back = hurwitz_move(m, p, d == Direction::forward ? Direction::backward : Direction::forward);
      CHECK(braid_equal(back.bands[p - 1].as_word(), b.bands[p - 1].as_word()));
      CHECK(braid_equal(back.bands[p].as_word(), b.bands[p].as_word()));
    }
  }
  CHECK_THROWS_AS(hurwitz_move(b, 3, Direction::forward), std::out_of_range);
}
