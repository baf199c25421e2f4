#include "fillkit/surface.hpp"

#include "doctest.h"

using namespace fillkit;
using namespace fillkit::surface;

namespace {

IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

void check_lattice(const Surface& s) {
  const auto& j = s.pairing();
  const std::size_t n = j.rows();
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(j(a, a) == 0);
    for (std::size_t b = 0; b < n; ++b) CHECK(j(a, b) == -j(b, a));
  }
  IntVector sum(n, Integer(0));
  for (const auto& name : s.boundary_names()) {
    const auto& cls = s.base(name).cls;
    for (std::size_t k = 0; k < n; ++k) {
      sum[k] += cls[k];
      IntVector e(n, Integer(0));
      e[k] = 1;
      CHECK(s.pair(cls, e) == 0);
    }
  }
  CHECK(sum == IntVector(n, Integer(0)));
}

}  // namespace

TEST_CASE("S1_3 registry") {
  const Surface& s = Surface::get("S1_3");
  CHECK(s.intersection("a1", "a2") == 0);
  CHECK(s.intersection("a1", "a3") == 0);
  CHECK(s.intersection("d1", "b2") == 0);
  for (const char* a : {"a1", "a2", "a3"}) CHECK(s.intersection(a, "b2") == 1);
  CHECK(s.model().homology_rank() == 4);
  CHECK(s.model().euler() == -3);
  check_lattice(s);
}

TEST_CASE("other registries") {
  check_lattice(Surface::get("S1_2"));
  check_lattice(Surface::get("S1_1"));
  check_lattice(Surface::get("S0_5"));
  CHECK(Surface::get("S1_1").intersection("x", "y") == 1);
  CHECK(Surface::get("S1_2").intersection("hb2", "ha1") == 1);
  CHECK(Surface::get("S1_2").intersection("hb2", "ha2") == 1);
  CHECK_THROWS(SurfaceModel::parse("S2_1"));
  CHECK_THROWS(Surface::get("S1_4"));
  CHECK_THROWS(Surface::get("S0_1"));
}

TEST_CASE("homology classes under the fixed convention") {
  const Surface& s = Surface::get("S1_3");
  CHECK(s.homology_class(parse_curve("b2")) == v({0, 0, 0, 1}));
  CHECK(s.homology_class(parse_curve("b1")) == v({1, 1, 1, 1}));
  CHECK(s.homology_class(parse_curve("b3")) == v({-1, -1, -1, 1}));
  CHECK(s.homology_class(parse_curve("{a1^7}b2")) == v({-7, 0, 0, 1}));
  CHECK(s.homology_class(parse_curve("{a1^-1}b2")) == v({1, 0, 0, 1}));
  CHECK(s.homology_class(parse_curve("d1")) == s.base("d1").cls);
  CHECK_THROWS(s.homology_class(parse_curve("x")));
}

TEST_CASE("transport matches the transport's homology matrix") {
  const Surface& s = Surface::get("S1_3");
  const Word h = parse_word("a1 b2^-2 a3");
  for (const char* c : {"a1", "a2", "b2", "d3", "e23"}) {
    const IntVector base = s.homology_class(Curve(c));
    CHECK(s.homology_class(transported(h, Curve(c))) == s.homology_rep(h).apply(base));
  }
}

TEST_CASE("normalization") {
  const Surface& s = Surface::get("S1_3");
  CHECK(s.normalize(parse_curve("{a2}a1")) == Curve("a1"));
  CHECK(s.normalize(parse_curve("{b2 d1}a1")) == s.normalize(parse_curve("{b2}a1")));
  CHECK(s.normalize(parse_curve("{a1 a1^-1}b2")) == Curve("b2"));
  CHECK(s.normalize(parse_curve("{a2^2}d1")) == Curve("d1"));
  CHECK(s.format(parse_curve("b1")) == "b1");
  CHECK(s.format(parse_curve("{a1^-3}b1")) == "{a1^-3}b1");
  const Surface& h = Surface::get("S1_2");
  CHECK(h.normalize(parse_curve("hat-b2")) == Curve("hb2"));
  CHECK(h.normalize(parse_curve("hat-b1")) == h.normalize(parse_curve("hb1")));
}

TEST_CASE("capping") {
  const Surface& s = Surface::get("S1_3");
  auto m = cap(s.model(), 3);
  CHECK(m.target.id() == "S1_2");
  CHECK(m.class_map.apply(s.homology_class(parse_curve("b1"))) == v({1, 2, 1}));
  CHECK(m.class_map.apply(s.homology_class(parse_curve("b2"))) == v({0, 0, 1}));
  CHECK_FALSE(m.apply(Curve("d3")));
  CHECK(*m.apply(parse_curve("b1")) == Surface::get("S1_2").normalize(parse_curve("hb1")));

  auto m2 = cap(m.target, 1);
  auto both = compose(m, m2);
  CHECK(both.class_map == m2.class_map * m.class_map);
  for (const char* a : {"a1", "a2", "a3"}) CHECK(both.class_map.apply(s.homology_class(Curve(a))) == v({1, 0}));
  CHECK_THROWS(cap(SurfaceModel::parse("S1_1"), 1));
  CHECK_THROWS(cap(s.model(), 1));
}

TEST_CASE("capping is compatible with homology classes of transported curves") {
  const Surface& s = Surface::get("S1_3");
  const Surface& t = Surface::get("S1_2");
  auto m = cap(s.model(), 3);
  for (const char* text : {"{a1^-4}b1", "{a3 b2}a2", "{b2^-1 a1}b3", "{a2^3}b2"}) {
    const Curve c = parse_curve(text);
    CHECK(t.homology_class(*m.apply(c)) == m.class_map.apply(s.homology_class(c)));
  }
}

TEST_CASE("planar fundamental group data") {
  const Surface& s = Surface::get("S0_4");
  CHECK(s.pi1_rank() == 3);
  for (const char* c : {"c1_2", "c1_3", "c2_3"}) {
    const auto& act = s.base_twist_action(c);
    const auto word = s.base_word(c);
    // a twist fixes its own curve
    CHECK(word.substitute(act) == word);
  }
  // the outer boundary word is fixed by every twist
  const auto outer = s.base_word("d4");
  for (const char* c : {"c1_2", "c1_3", "c2_3", "d1", "d4"}) CHECK(outer.substitute(s.base_twist_action(c)) == outer);
}
