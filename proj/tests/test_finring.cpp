#include <doctest.h>

#include "grograde/finring.hpp"

using namespace grograde;

TEST_CASE("zn construction and arithmetic") {
  FiniteCommRing R = zn(6);
  CHECK(R.size() == 6);
  CHECK(R.elem(R.zero()) == "0");
  CHECK(R.elem(R.one()) == "1");
  CHECK(R.add(4, 5) == 3);
  CHECK(R.mul(4, 5) == 2);
  CHECK(R.neg(2) == 4);
  // zero padded names keep lexicographic = numeric order
  FiniteCommRing R12 = zn(12);
  CHECK(R12.elem(0) == "00");
  CHECK(R12.elem(11) == "11");
  CHECK(R12.mul(9, 9) == 9);
}

TEST_CASE("idempotents of Z_6 and Z_12") {
  CHECK(zn(6).idempotents() == std::vector<int>{0, 1, 3, 4});
  CHECK(zn(12).idempotents() == std::vector<int>{0, 1, 4, 9});
  CHECK(zn(7).idempotents() == std::vector<int>{0, 1});
}

TEST_CASE("principal ideals of idempotents in Z_6") {
  FiniteCommRing R = zn(6);
  CHECK(R.ideal_of(3) == std::vector<int>{0, 3});
  CHECK(R.ideal_of(4) == std::vector<int>{0, 2, 4});
  CHECK(R.ideal_of(0) == std::vector<int>{0});
  CHECK(R.ideal_of(1) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(R.ideal_of(2), Error);  // 2*2 = 4 != 2
}

TEST_CASE("idempotent to unital ideal bijection") {
  {
    IdemIdealReport r = check_idem_ideal_bijection(zn(6), 12);
    CHECK(r.bijective);
    CHECK(r.products_match);
    CHECK(r.method == "subset");
    CHECK(r.idempotent_count == 4);
    CHECK(r.ideal_count == 4);
  }
  {
    IdemIdealReport r = check_idem_ideal_bijection(zn(12), 12);
    CHECK(r.bijective);
    CHECK(r.products_match);
    CHECK(r.idempotent_count == 4);
  }
  {
    // above the cap: principal method
    IdemIdealReport r = check_idem_ideal_bijection(zn(30), 12);
    CHECK(r.method == "principal");
    CHECK(r.bijective);
    CHECK(r.products_match);
    CHECK(r.idempotent_count == 8);  // 2^3 idempotents for squarefree 30
  }
}

TEST_CASE("unit groups with cyclic decomposition") {
  FiniteCommMonoid M9 = zn(9).mul_monoid();
  auto U = M9.unit_group_of(M9.one());
  CHECK(U.elems.size() == 6);
  CHECK(elementary_divisors(U.decomp.orders) == std::vector<i64>{2, 3});

  FiniteCommMonoid M8 = zn(8).mul_monoid();
  auto U8 = M8.unit_group_of(M8.one());
  CHECK(U8.elems.size() == 4);
  CHECK(elementary_divisors(U8.decomp.orders) == std::vector<i64>{2, 2});

  // unit group of a cut ideal: ideal of 4 in Z_6 is {0,2,4} with identity 4
  FiniteCommMonoid M6 = zn(6).mul_monoid();
  CHECK(M6.ideal_elems(4) == std::vector<int>{0, 2, 4});
  auto U4 = M6.unit_group_of(4);
  CHECK(U4.identity == 4);
  CHECK(U4.elems == std::vector<int>{2, 4});
  CHECK(elementary_divisors(U4.decomp.orders) == std::vector<i64>{2});
  // inverse table: 2*2 = 4 so 2 is its own inverse
  CHECK(U4.inv[0] == 2);
  CHECK_THROWS_AS(M6.unit_group_of(2), Error);
}

TEST_CASE("product rings and gf4") {
  FiniteCommRing P = ring_product(zn(3), zn(3), "a", "b");
  CHECK(P.size() == 9);
  int e10 = P.index("a1|b0");
  CHECK(P.mul(e10, e10) == e10);  // (1,0) idempotent
  CHECK(P.idempotents().size() == 4);

  FiniteCommRing F4 = gf4();
  CHECK(F4.size() == 4);
  int x = F4.index("x"), y = F4.index("y");
  CHECK(F4.mul(x, x) == y);
  CHECK(F4.mul(x, y) == F4.one());
  CHECK(F4.add(x, y) == F4.one());
  CHECK(F4.idempotents() == std::vector<int>{F4.zero(), F4.one()});
  auto U = F4.mul_monoid().unit_group_of(F4.one());
  CHECK(elementary_divisors(U.decomp.orders) == std::vector<i64>{3});
}

TEST_CASE("ring validation catches broken tables") {
  // non-commutative multiplication
  std::vector<std::vector<int>> add = {{0, 1}, {1, 0}};
  std::vector<std::vector<int>> mul = {{0, 0}, {1, 1}};  // 1*0=1 but 0*1=0
  CHECK_THROWS_AS(FiniteCommRing::make({"0", "1"}, add, mul, 0, 1), Error);
  // distributivity broken: mul table of Z_2 with 1*1 = 0
  std::vector<std::vector<int>> mul2 = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(FiniteCommRing::make({"0", "1"}, add, mul2, 0, 1), Error);
}
