#include "doctest.h"
#include "grograde/leavitt.hpp"

#include <string>

using namespace grograde;

namespace {

FinGraph three_line() {
  return FinGraph::make({"v1", "v2", "v3"},
                        {{"f1", "v2", "v1"}, {"f2", "v2", "v3"}});
}

int idx_of(const LeavittAlgebra& L, const std::string& name) {
  for (int i = 0; i < L.dim(); ++i)
    if (L.mono_name(i) == name) return i;
  FAIL("no basis monomial named " << name);
  return -1;
}

}  // namespace

TEST_CASE("three-line graph: basis, relations, star") {
  auto L = LeavittAlgebra::make(three_line(), 3);
  const auto& A = L.graded().alg();
  CHECK(L.dim() == 8);

  int b_v1 = idx_of(L, "v1");
  int b_f1s = idx_of(L, "(f1)*");
  int b_f1 = idx_of(L, "f1");
  int b_f1f1s = idx_of(L, "f1(f1)*");
  int b_f2f2s = idx_of(L, "f2(f2)*");
  int b_v3 = idx_of(L, "v3");
  CHECK(b_v1 == 0);
  CHECK(b_f1s == 1);
  CHECK(b_f1 == 2);
  CHECK(b_f1f1s == 3);
  CHECK(b_f2f2s == 4);
  CHECK(b_v3 == 7);

  int v1 = L.graph().vertex_index("v1");
  int v2 = L.graph().vertex_index("v2");
  int v3 = L.graph().vertex_index("v3");
  CHECK(L.vertex_vec(v1) == A.unit_vec(b_v1));
  CHECK(L.vertex_vec(v2) ==
        A.field().plus(A.unit_vec(b_f1f1s), A.unit_vec(b_f2f2s)));
  CHECK(L.edge_vec(0) == A.unit_vec(b_f1));
  CHECK(L.ghost_vec(0) == A.unit_vec(b_f1s));
  CHECK(L.star(L.edge_vec(0)) == L.ghost_vec(0));

  // CK relations: f* f = r(f), sum of f f* over edges at v2 gives v2,
  // distinct edges annihilate
  CHECK(A.mul(L.ghost_vec(0), L.edge_vec(0)) == L.vertex_vec(v1));
  CHECK(A.mul(L.ghost_vec(1), L.edge_vec(1)) == L.vertex_vec(v3));
  CHECK(A.field().is_zero(A.mul(L.ghost_vec(0), L.edge_vec(1))));
  CHECK(A.field().plus(A.mul(L.edge_vec(0), L.ghost_vec(0)),
                       A.mul(L.edge_vec(1), L.ghost_vec(1))) ==
        L.vertex_vec(v2));

  // identity is the sum of the vertices
  Vec one = L.vertex_vec(v1);
  one = A.field().plus(one, L.vertex_vec(v2));
  one = A.field().plus(one, L.vertex_vec(v3));
  CHECK(A.one() == one);

  // star reverses products
  Vec x = L.edge_vec(0), y = L.ghost_vec(0);
  CHECK(L.star(A.mul(x, y)) == A.mul(L.star(y), L.star(x)));
}

TEST_CASE("three-line graph: grading and epsilons") {
  auto L = LeavittAlgebra::make(three_line(), 3);
  const auto& G = L.graded().groupoid();
  const auto& A = L.graded().alg();
  CHECK(G.n_morphisms() == 9);
  CHECK(L.graded().deg(idx_of(L, "f1")) == G.morphism_index("(v2,v1)"));
  CHECK(L.graded().deg(idx_of(L, "(f2)*")) == G.morphism_index("(v3,v2)"));

  CHECK_FALSE(is_strongly_graded(L.graded()).strong);

  int v1 = 0, v2 = 1, v3 = 2;
  Vec zero((size_t)L.dim(), 0);
  CHECK(L.epsilon(v2, v1) == A.unit_vec(idx_of(L, "f1(f1)*")));
  CHECK(L.epsilon(v1, v2) == A.unit_vec(idx_of(L, "v1")));
  CHECK(L.epsilon(v3, v2) == A.unit_vec(idx_of(L, "v3")));
  CHECK(L.epsilon(v2, v3) == A.unit_vec(idx_of(L, "f2(f2)*")));
  CHECK(L.epsilon(v1, v3) == zero);
  CHECK(L.epsilon(v3, v1) == zero);
  CHECK(L.epsilon(v1, v1) == L.vertex_vec(v1));
  CHECK(L.epsilon(v2, v2) == L.vertex_vec(v2));

  // combinatorial epsilons agree with the linear-algebra ones
  auto E = compute_epsilons(L.graded());
  REQUIRE(E.epsilon_strong);
  auto mine = L.epsilons();
  REQUIRE(mine.size() == E.eps.size());
  for (size_t g = 0; g < mine.size(); ++g) CHECK(mine[g] == E.eps[g]);
}

TEST_CASE("parallel edges give a strongly graded matrix algebra") {
  auto g = FinGraph::make({"u", "w"}, {{"e1", "u", "w"}, {"e2", "u", "w"}});
  auto L = LeavittAlgebra::make(g, 2);
  CHECK(L.dim() == 9);
  CHECK(is_strongly_graded(L.graded()).strong);
  auto E = compute_epsilons(L.graded());
  REQUIRE(E.epsilon_strong);
  const auto& G = L.graded().groupoid();
  CHECK(E.eps[(size_t)G.morphism_index("(u,w)")] == L.vertex_vec(0));
  CHECK(E.eps[(size_t)G.morphism_index("(w,u)")] == L.vertex_vec(1));
  CHECK(L.epsilons() == E.eps);
}

TEST_CASE("isolated vertex lives in its own component") {
  auto g = FinGraph::make({"v1", "v2", "v3", "z"},
                          {{"f1", "v2", "v1"}, {"f2", "v2", "v3"}});
  auto L = LeavittAlgebra::make(g, 3);
  CHECK(L.dim() == 9);
  const auto& G = L.graded().groupoid();
  CHECK(G.n_morphisms() == 10);
  int z = L.graph().vertex_index("z");
  CHECK(L.epsilon(z, z) == L.vertex_vec(z));
  CHECK_THROWS_AS(L.epsilon(0, z), Error);  // no morphism across components
  CHECK(L.epsilons() == compute_epsilons(L.graded()).eps);
}

TEST_CASE("leavitt rejections") {
  auto cyc = FinGraph::make({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}});
  CHECK_THROWS_WITH_AS(LeavittAlgebra::make(cyc, 3),
                       doctest::Contains("cycl"), Error);
  CHECK_THROWS_AS(LeavittAlgebra::make(three_line(), 4), Error);
  CHECK_THROWS_AS(LeavittAlgebra::make(FinGraph::make({}, {}), 3), Error);
}
