#include <doctest.h>

#include "grograde/fp.hpp"
#include "grograde/intlat.hpp"
#include "grograde/util.hpp"

using namespace grograde;

static IMat mul3(const IMat& a, const IMat& b, const IMat& c) {
  return imat_mul(imat_mul(a, b), c);
}

TEST_CASE("fp arithmetic") {
  Fp f{7};
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pw(3, 6) == 1);
  CHECK(f.norm(-1) == 6);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
}

TEST_CASE("rowspace canonical basis independent of insertion order") {
  Fp f{5};
  RowSpace a(f, 3), b(f, 3);
  a.insert({1, 2, 0});
  a.insert({0, 1, 1});
  b.insert({1, 3, 1});  // (1,2,0) + (0,1,1)
  b.insert({3, 0, 4});  // 3*(1,2,0) + 4*(0,1,1)
  b.insert({0, 1, 1});
  CHECK(a.dim() == 2);
  CHECK(b.dim() == 2);
  CHECK(a.basis() == b.basis());
  CHECK(a.contains({2, 4, 0}));
  CHECK(!a.contains({0, 0, 1}));
  Vec c = a.coords({1, 3, 1});
  CHECK(c.size() == 2);
  // reconstruct
  Vec r(3, 0);
  for (size_t i = 0; i < c.size(); ++i) f.axpy(r, c[i], a.basis()[i]);
  CHECK(r == Vec{1, 3, 1});
}

TEST_CASE("solve_linear") {
  Fp f{5};
  // x + 2y = 4, 3y = 3  ->  y = 1, x = 2
  auto s = solve_linear(f, {{1, 2}, {0, 3}}, {4, 3});
  CHECK(s.ok);
  CHECK(s.nullity == 0);
  CHECK(s.sol == Vec{2, 1});
  // inconsistent
  auto t = solve_linear(f, {{1, 1}, {2, 2}}, {1, 3});
  CHECK(!t.ok);
  // underdetermined: x + y = 2 over Z_5 has nullity 1
  auto u = solve_linear(f, {{1, 1}}, {2});
  CHECK(u.ok);
  CHECK(u.nullity == 1);
  CHECK(f.add(u.sol[0], u.sol[1]) == 2);
}

static void check_snf_shape(const IMat& A) {
  Snf s = smith_normal_form(A);
  CHECK(mul3(s.P, A, s.Q) == s.D);
  CHECK(imat_mul(s.P, s.Pinv) == imat_identity(A.size()));
  CHECK(imat_mul(s.Q, s.Qinv) == imat_identity(A[0].size()));
  for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
    CHECK(s.diag[i] >= 0);
    if (s.diag[i + 1] != 0) {
      REQUIRE(s.diag[i] != 0);
      CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
  }
}

TEST_CASE("smith normal form small cases") {
  {
    Snf s = smith_normal_form({{2, 0}, {0, 3}});
    CHECK(s.diag == std::vector<i64>{1, 6});
  }
  {
    Snf s = smith_normal_form({{4, 0}, {0, 6}});
    CHECK(s.diag == std::vector<i64>{2, 12});
  }
  {
    Snf s = smith_normal_form({{1, 2}, {3, 4}});  // det = -2
    CHECK(s.diag == std::vector<i64>{1, 2});
  }
  check_snf_shape({{2, 0}, {0, 3}});
  check_snf_shape({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  check_snf_shape({{0, 0}, {0, 0}});
  check_snf_shape({{3, 1, 2}});
  check_snf_shape({{5}, {10}, {15}});
}

TEST_CASE("smith normal form randomized shape checks") {
  Rng rng(12345);
  for (int it = 0; it < 50; ++it) {
    size_t m = 1 + rng.next(5), n = 1 + rng.next(5);
    IMat a(m, std::vector<i64>(n));
    for (auto& row : a)
      for (auto& x : row) x = (i64)rng.next(21) - 10;
    check_snf_shape(a);
  }
}

TEST_CASE("integer kernel") {
  IMat k = integer_kernel({{2, 4}});
  REQUIRE(k.size() == 2);  // 2 rows (n=2), columns = kernel basis
  REQUIRE(k[0].size() == 1);
  i64 x = k[0][0], y = k[1][0];
  CHECK(2 * x + 4 * y == 0);
  CHECK((x != 0 || y != 0));
  // x + 2y = 0 and primitive: (2,-1) up to sign
  CHECK(std::abs(x) == 2);
  CHECK(std::abs(y) == 1);

  IMat k2 = integer_kernel({{1, 0}, {0, 1}});
  CHECK(k2[0].empty());  // trivial kernel: zero columns
}

TEST_CASE("integer solve") {
  auto s = integer_solve({{2, 0}, {0, 3}}, {4, 9});
  REQUIRE(s.has_value());
  CHECK(*s == std::vector<i64>{2, 3});
  CHECK(!integer_solve({{2, 0}, {0, 3}}, {1, 0}).has_value());
  // underdetermined but solvable: 2x + 4y = 6
  auto t = integer_solve({{2, 4}}, {6});
  REQUIRE(t.has_value());
  CHECK(2 * (*t)[0] + 4 * (*t)[1] == 6);
}

TEST_CASE("lattice column basis and quotient") {
  // columns (2,0),(0,3),(2,3) generate the lattice 2Z x 3Z
  IMat b = lattice_column_basis({{2, 0, 2}, {0, 3, 3}});
  REQUIRE(b.size() == 2);
  REQUIRE(b[0].size() == 2);

  LatticeQuotient q = lattice_quotient(imat_identity(2), {{2, 0}, {0, 3}});
  CHECK(q.order == 6);
  CHECK(q.orders == std::vector<i64>{6});

  LatticeQuotient r = lattice_quotient(imat_identity(2), {{2, 0}, {0, 2}});
  CHECK(r.order == 4);
  CHECK(r.orders == std::vector<i64>{2, 2});
  CHECK(r.gens.size() == 2);
  CHECK(r.gens[0].size() == 2);
}

TEST_CASE("abelian decomposition from tables") {
  // Z_6 cyclic
  std::vector<std::vector<int>> z6(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) z6[i][j] = (i + j) % 6;
  AbelianDecomp d = abelian_decompose(z6, 0);
  CHECK(d.orders == std::vector<i64>{6});
  CHECK(d.group_order() == 6);
  for (int i = 0; i < 6; ++i) CHECK(d.exp(d.log[i]) == i);

  // Klein four group: bit xor
  std::vector<std::vector<int>> v4(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v4[i][j] = i ^ j;
  AbelianDecomp k = abelian_decompose(v4, 0);
  CHECK(k.orders == std::vector<i64>{2, 2});
  for (int i = 0; i < 4; ++i) CHECK(k.exp(k.log[i]) == i);

  // Z_2 x Z_6 as pairs (a,b) -> index 6a+b
  std::vector<std::vector<int>> z26(12, std::vector<int>(12));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      int a = (i / 6 + j / 6) % 2, b = (i % 6 + j % 6) % 6;
      z26[i][j] = 6 * a + b;
    }
  AbelianDecomp e = abelian_decompose(z26, 0);
  CHECK(e.orders == std::vector<i64>{2, 6});
  CHECK(e.group_order() == 12);
  for (int i = 0; i < 12; ++i) CHECK(e.exp(e.log[i]) == i);
  // log is a homomorphism
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      auto sum = e.log[i];
      for (size_t t = 0; t < sum.size(); ++t)
        sum[t] = (sum[t] + e.log[j][t]) % e.orders[t];
      CHECK(e.exp(sum) == z26[i][j]);
    }
}

TEST_CASE("elementary divisors") {
  CHECK(elementary_divisors({2, 6}) == std::vector<i64>{2, 2, 3});
  CHECK(elementary_divisors({6}) == std::vector<i64>{2, 3});
  CHECK(elementary_divisors({4}) == std::vector<i64>{4});
  CHECK(elementary_divisors({}) == std::vector<i64>{});
  CHECK(elementary_divisors({2, 2, 4}) == std::vector<i64>{2, 2, 4});
  CHECK(elementary_divisors({12, 12}) == std::vector<i64>{3, 3, 4, 4});
}

TEST_CASE("fnv digest stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("grograde") == fnv1a_hex("grograde"));
}

TEST_CASE("nullspace over Z_p") {
  Fp f{5};
  auto b = nullspace(f, {{1, 2}}, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Vec{3, 1});

  CHECK(nullspace(f, {}, 2).size() == 2);
  CHECK(nullspace(f, {{0, 0}}, 2).size() == 2);
  CHECK(nullspace(f, {{1, 0}, {0, 1}}, 2).empty());

  // every basis vector really is in the kernel
  std::vector<Vec> rows = {{1, 2, 3, 4}, {2, 4, 1, 0}};
  auto k = nullspace(f, rows, 4);
  CHECK(k.size() == 2);
  for (const auto& v : k)
    for (const auto& r : rows) {
      u32 acc = 0;
      for (size_t j = 0; j < 4; ++j) acc = f.add(acc, f.mul(r[j], v[j]));
      CHECK(acc == 0);
    }
}
