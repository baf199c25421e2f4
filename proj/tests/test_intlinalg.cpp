#include "fillkit/intlinalg.hpp"

#include "doctest.h"

#include <vector>

using namespace fillkit;
using namespace fillkit::intlinalg;

namespace {

// Plain Laplace expansion, independent of the Bareiss code.
Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    const Integer term = a(0, j) * cofactor_det(minor);
    sum += (j % 2 ? -term : term);
  }
  return sum;
}

IntMatrix pn_matrix(long n) { return IntMatrix{{1, 1, 1, 1}, {0, 0, 0, 1}, {-1, -1, -1, 1}, {-n, 0, 0, 1}}; }

}  // namespace

TEST_CASE("zero matrix has no invariant factors") {
  IntMatrix z(3, 3);
  auto r = smith_normal_form(z);
  CHECK(r.diagonal == z);
  CHECK(r.invariant_factors.empty());
  CHECK(r.rank() == 0);
}

TEST_CASE("diag(2 3) mixes to diag(1 6)") {
  IntMatrix a{{2, 0}, {0, 3}};
  auto r = smith_normal_form(a);
  CHECK(r.left * a * r.right == r.diagonal);
  CHECK(r.diagonal == IntMatrix{{1, 0}, {0, 6}});
  REQUIRE(r.invariant_factors.size() == 1);
  CHECK(r.invariant_factors[0] == 6);

  // count the cosets of the row lattice by brute force: v lies in the lattice
  // iff v * adj(A) is divisible by det(A)
  int hits = 0;
  for (long x = 0; x < 6; ++x)
    for (long y = 0; y < 6; ++y)
      if ((x * 3) % 6 == 0 && (y * 2) % 6 == 0) ++hits;
  CHECK(36 / hits == 6);
}

TEST_CASE("P_5 relation matrix") {
  auto r = smith_normal_form(pn_matrix(5));
  CHECK(r.left * pn_matrix(5) * r.right == r.diagonal);
  REQUIRE(r.invariant_factors.size() == 1);
  CHECK(r.invariant_factors[0] == 5);
  const auto nz = r.nonzero_diagonal();
  REQUIRE(nz.size() == 3);
  CHECK(nz[0] == 1);
  CHECK(nz[1] == 1);
  CHECK(nz[2] == 5);
  CHECK(cokernel(pn_matrix(5)) == AbelianGroup::parse("Z + Z/5"));
}

TEST_CASE("cokernel basics") {
  CHECK(cokernel(IntMatrix(0, 3)) == AbelianGroup::free(3));
  CHECK(cokernel(pn_matrix(0)) == AbelianGroup::free(2));
  CHECK(cokernel(IntMatrix{{2, 4}, {6, 8}}) == AbelianGroup::parse("Z/2 + Z/4"));
  CHECK(cokernel(IntMatrix{{0, 0}}) == AbelianGroup::free(2));
}

TEST_CASE("determinant matches cofactor expansion") {
  const std::vector<IntMatrix> cases = {
      IntMatrix{{3}},
      IntMatrix{{1, 2}, {3, 4}},
      IntMatrix{{0, 1, 2}, {3, 0, 5}, {1, 1, 0}},
      IntMatrix{{2, -1, 0, 3}, {1, 1, 1, 1}, {0, 4, -2, 1}, {5, 0, 0, -1}},
      IntMatrix{{0, 0}, {0, 0}},
  };
  for (const auto& a : cases) CHECK(determinant(a) == cofactor_det(a));
}

TEST_CASE("large entries stay exact") {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("100000000000000000000");
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = Integer("100000000000000000000");
  CHECK(determinant(a) == Integer("9999999999999999999999999999999999999999"));
  auto r = smith_normal_form(a);
  CHECK(r.left * a * r.right == r.diagonal);
  REQUIRE(r.invariant_factors.size() == 1);
  CHECK(r.invariant_factors[0] == Integer("9999999999999999999999999999999999999999"));
}

TEST_CASE("abelian group canonical form") {
  std::vector<Integer> orders = {Integer(2), Integer(3), Integer(1), Integer(4)};
  auto g = AbelianGroup::from_cyclic_orders(1, orders);
  CHECK(g.to_string() == "Z + Z/2 + Z/12");
  CHECK(AbelianGroup::parse("Z^2 + Z/6") == AbelianGroup::free(2).direct_sum(AbelianGroup::cyclic(6)));
  CHECK(AbelianGroup::parse("0").is_trivial());
  CHECK(AbelianGroup::cyclic(1).is_trivial());
  CHECK(AbelianGroup::cyclic(0) == AbelianGroup::free(1));
  CHECK(AbelianGroup::parse(AbelianGroup::parse("Z/2 + Z/4 + Z^3").to_string()) == AbelianGroup::parse("Z^3 + Z/2 + Z/4"));
  CHECK_THROWS(AbelianGroup::parse("Q"));
}

TEST_CASE("SNF stays small on a matrix that once blew up") {
  // relation rows of a conjugated Hurwitz orbit member of P_5
  IntMatrix a{{10316, 10326, -26301, -12209}, {-4515, -4520, 11512, 5344}, {2797, 2807, -7141, -3316}, {-1943, -1948, 4958, 2302}};
  auto r = smith_normal_form(a);
  CHECK(r.left * a * r.right == r.diagonal);
  CHECK(r.invariant_factors == std::vector<Integer>{Integer(5)});
  CHECK(cokernel(a) == AbelianGroup::parse("Z + Z/5"));
}
