#include "doctest.h"
#include "grograde/algebra.hpp"

#include <vector>

using namespace grograde;

namespace {

// dense table t[i][j] = coefficient vector of b_i * b_j
StructAlgebra from_table(u32 p, const std::vector<std::vector<Vec>>& t,
                         Vec one) {
  int d = (int)t.size();
  std::vector<ScEntry> sc;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (t[i][j][(size_t)k]) sc.push_back({i, j, k, t[i][j][(size_t)k]});
  return StructAlgebra::make(p, d, sc, std::move(one));
}

// group algebra Z_p[Z_2]: b0 = 1, b1 = generator
StructAlgebra group_alg_z2(u32 p) {
  return from_table(p,
                    {{{1, 0}, {0, 1}},
                     {{0, 1}, {1, 0}}},
                    {1, 0});
}

// M_2(Z_p) on basis E11, E12, E21, E22
StructAlgebra mat2(u32 p) {
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, Vec(4, 0)));
  auto idx = [](int r, int c) { return 2 * r + c; };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          if (c == r2) t[(size_t)idx(r, c)][(size_t)idx(r2, c2)]
                        [(size_t)idx(r, c2)] = 1;
  return from_table(p, t, {1, 0, 0, 1});
}

}  // namespace

TEST_CASE("struct algebra arithmetic and validation") {
  auto A = group_alg_z2(3);
  CHECK(A.dim() == 2);
  CHECK(A.p() == 3);
  CHECK(A.mul({1, 1}, {1, 2}) == Vec{0, 0});
  CHECK(A.mul({0, 1}, {0, 1}) == Vec{1, 0});
  CHECK(A.one() == Vec{1, 0});

  CHECK_THROWS_WITH_AS(
      StructAlgebra::make(6, 1, {{0, 0, 0, 1}}, {1}),
      doctest::Contains("prime"), Error);

  // b1*b2 = 1 with all other non-identity products zero is not associative
  CHECK_THROWS_AS(from_table(5,
                             {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                              {{0, 1, 0}, {0, 0, 0}, {1, 0, 0}},
                              {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}},
                             {1, 0, 0}),
                  Error);

  // claimed identity is not one
  CHECK_THROWS_AS(from_table(3,
                             {{{1, 0}, {0, 1}},
                              {{0, 1}, {1, 0}}},
                             {0, 1}),
                  Error);

  CHECK_THROWS_AS(StructAlgebra::make(3, 2, {{0, 0, 5, 1}}, {1, 0}), Error);
}

TEST_CASE("group algebra of Z_2 is strongly graded") {
  auto G = one_object_group(2);
  auto A = GradedAlgebra::make(group_alg_z2(3), G, {0, 1});
  CHECK(A.component(0) == std::vector<int>{0});
  CHECK(A.component(1) == std::vector<int>{1});

  auto sr = is_strongly_graded(A);
  CHECK(sr.strong);

  auto E = compute_epsilons(A);
  REQUIRE(E.epsilon_strong);
  CHECK(E.eps[0] == Vec{1, 0});
  CHECK(E.eps[1] == Vec{1, 0});

  CHECK(gamma_apply(A, E, 1, {1, 0}) == Vec{1, 0});

  for (auto& pr : A.groupoid().composable_tuples(2)) {
    auto m = check_m_iso(A, E, pr[0], pr[1]);
    CHECK(m.ok);
    CHECK(m.dim_tensor == 1);
    CHECK(m.dim_image == 1);
  }
}

TEST_CASE("null top component is neither strong nor epsilon-strong") {
  // b1*b1 = 0 instead of 1
  auto alg = from_table(3,
                        {{{1, 0}, {0, 1}},
                         {{0, 1}, {0, 0}}},
                        {1, 0});
  auto A = GradedAlgebra::make(std::move(alg), one_object_group(2), {0, 1});
  auto sr = is_strongly_graded(A);
  CHECK_FALSE(sr.strong);
  CHECK(sr.witness_g == 1);
  CHECK(sr.witness_h == 1);
  CHECK(sr.dim_product == 0);
  CHECK(sr.dim_target == 1);

  auto E = compute_epsilons(A);
  CHECK_FALSE(E.epsilon_strong);
  CHECK(E.failure_morphism == 1);
  CHECK_THROWS_AS(E.require(), Error);
}

TEST_CASE("trivially graded product ring is epsilon-strong with zero epsilon") {
  // k x k, everything in degree g^0; S_{g^1} = 0
  auto alg = from_table(3,
                        {{{1, 0}, {0, 0}},
                         {{0, 0}, {0, 1}}},
                        {1, 1});
  auto A = GradedAlgebra::make(std::move(alg), one_object_group(2), {0, 0});
  CHECK_FALSE(is_strongly_graded(A).strong);
  auto E = compute_epsilons(A);
  REQUIRE(E.epsilon_strong);
  CHECK(E.eps[0] == Vec{1, 1});
  CHECK(E.eps[1] == Vec{0, 0});
}

TEST_CASE("matrix algebra graded by the pair groupoid") {
  auto G = pair_groupoid({"x", "y"});
  // morphisms sorted: (x,x) (x,y) (y,x) (y,y)
  auto A = GradedAlgebra::make(mat2(2), G, {0, 1, 2, 3});
  CHECK(is_strongly_graded(A).strong);

  auto E = compute_epsilons(A);
  REQUIRE(E.epsilon_strong);
  CHECK(E.eps[(size_t)G.morphism_index("(x,y)")] == Vec{1, 0, 0, 0});
  CHECK(E.eps[(size_t)G.morphism_index("(y,x)")] == Vec{0, 0, 0, 1});
  CHECK(E.eps[(size_t)G.morphism_index("(x,x)")] == Vec{1, 0, 0, 0});

  // centers: Z(S_{id_y}) = span{E22}, cut by eps_{(y,x)} stays span{E22}
  auto zy = center_of_object(A, G.object_index("y"));
  REQUIRE(zy.size() == 1);
  CHECK(zy[0] == Vec{0, 0, 0, 1});
  auto cut = cut_center(A, E.eps[(size_t)G.morphism_index("(y,x)")],
                        G.object_index("y"));
  REQUIRE(cut.size() == 1);
  CHECK(cut[0] == Vec{0, 0, 0, 1});

  // gamma along (x,y) moves the corner at y to the corner at x
  int gxy = G.morphism_index("(x,y)");
  CHECK(gamma_apply(A, E, gxy, {0, 0, 0, 1}) == Vec{1, 0, 0, 0});

  for (auto& pr : G.composable_tuples(2)) {
    auto m = check_m_iso(A, E, pr[0], pr[1]);
    CHECK(m.ok);
    CHECK(m.dim_tensor == 1);
  }
}

TEST_CASE("group algebra times field: epsilon-strong but not strong") {
  // basis e1, e2, t with t^2 = e1, e1 t = t e1 = t, e2 t = 0
  auto alg = from_table(3,
                        {{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}},
                         {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
                         {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}},
                        {1, 1, 0});
  auto A = GradedAlgebra::make(std::move(alg), one_object_group(2), {0, 0, 1});

  auto sr = is_strongly_graded(A);
  CHECK_FALSE(sr.strong);
  CHECK(sr.witness_g == 1);
  CHECK(sr.witness_h == 1);
  CHECK(sr.dim_product == 1);
  CHECK(sr.dim_target == 2);

  auto E = compute_epsilons(A);
  REQUIRE(E.epsilon_strong);
  CHECK(E.eps[0] == Vec{1, 1, 0});
  CHECK(E.eps[1] == Vec{1, 0, 0});

  auto z = center_of_object(A, 0);
  REQUIRE(z.size() == 2);
  CHECK(z[0] == Vec{1, 0, 0});
  CHECK(z[1] == Vec{0, 1, 0});
  auto cut = cut_center(A, E.eps[1], 0);
  REQUIRE(cut.size() == 1);
  CHECK(cut[0] == Vec{1, 0, 0});

  CHECK(gamma_apply(A, E, 1, {1, 0, 0}) == Vec{1, 0, 0});
  CHECK(gamma_apply(A, E, 1, {2, 0, 0}) == Vec{2, 0, 0});

  for (auto& pr : A.groupoid().composable_tuples(2))
    CHECK(check_m_iso(A, E, pr[0], pr[1]).ok);
}

TEST_CASE("grading violations are rejected") {
  // b1*b1 = b1 lands outside S_{g^0}
  auto alg = from_table(3,
                        {{{1, 0}, {0, 1}},
                         {{0, 1}, {0, 1}}},
                        {1, 0});
  CHECK_THROWS_WITH_AS(
      GradedAlgebra::make(std::move(alg), one_object_group(2), {0, 1}),
      doctest::Contains("grading"), Error);

  // non-composable degrees with a nonzero product
  auto G = pair_groupoid({"x", "y"});
  auto alg2 = from_table(2, {{{1}}}, {1});
  CHECK_THROWS_AS(
      GradedAlgebra::make(std::move(alg2), G,
                          {G.morphism_index("(x,y)")}),
      Error);

  auto alg3 = group_alg_z2(3);
  CHECK_THROWS_AS(GradedAlgebra::make(std::move(alg3), one_object_group(2),
                                      {0, 5}),
                  Error);
}
