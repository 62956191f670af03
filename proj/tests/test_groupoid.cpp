#include <doctest.h>

#include "grograde/groupoid.hpp"

using namespace grograde;

TEST_CASE("one object cyclic group") {
  FiniteGroupoid G = one_object_group(4);
  CHECK(G.n_objects() == 1);
  CHECK(G.n_morphisms() == 4);
  int e = G.identity(0);
  CHECK(G.is_identity(e));
  for (int g = 0; g < 4; ++g) {
    CHECK(G.dom(g) == 0);
    CHECK(G.cod(g) == 0);
    CHECK(G.compose(g, G.inv(g)) == e);
    CHECK(G.compose(G.inv(g), g) == e);
  }
  CHECK(G.composable_tuples(2).size() == 16);
  CHECK(G.composable_tuples(3).size() == 64);
}

TEST_CASE("pair groupoid") {
  FiniteGroupoid G = pair_groupoid({"a", "b", "c"});
  CHECK(G.n_objects() == 3);
  CHECK(G.n_morphisms() == 9);
  int ab = G.morphism_index("(a,b)");
  int bc = G.morphism_index("(b,c)");
  int ac = G.morphism_index("(a,c)");
  int ca = G.morphism_index("(c,a)");
  // (a,b) has cod a, dom b; composable with (b,c)
  CHECK(G.cod(ab) == G.object_index("a"));
  CHECK(G.dom(ab) == G.object_index("b"));
  CHECK(G.compose(ab, bc) == ac);
  CHECK(G.compose(ab, ca) == -1);
  CHECK(G.inv(ab) == G.morphism_index("(b,a)"));
  CHECK(G.composable_tuples(2).size() == 27);
  // 2-object pair groupoid has n^(k+1) composable k-tuples
  FiniteGroupoid H = pair_groupoid({"x", "y"});
  CHECK(H.composable_tuples(2).size() == 8);
  CHECK(H.composable_tuples(3).size() == 16);
}

TEST_CASE("matrix groupoid") {
  FiniteGroupoid G = matrix_groupoid({"1", "2"}, 4);
  CHECK(G.n_objects() == 2);
  CHECK(G.n_morphisms() == 16);
  int m = G.morphism_index("(1,g^1,2)");
  int n = G.morphism_index("(2,g^3,1)");
  CHECK(G.compose(m, n) == G.morphism_index("(1,g^0,1)"));
  CHECK(G.compose(n, m) == G.morphism_index("(2,g^0,2)"));
  CHECK(G.is_identity(G.morphism_index("(1,g^0,1)")));
  CHECK(G.inv(m) == n);
  int a = G.morphism_index("(1,g^2,1)");
  CHECK(G.compose(a, a) == G.morphism_index("(1,g^0,1)"));
}

TEST_CASE("morphism order is lexicographic") {
  FiniteGroupoid G = pair_groupoid({"b", "a"});
  CHECK(G.morphism_id(0) == "(a,a)");
  CHECK(G.morphism_id(1) == "(a,b)");
  CHECK(G.object_id(0) == "a");
  auto t = G.composable_tuples(2);
  // first tuple is the lexicographically least composable pair
  CHECK(G.morphism_id(t[0][0]) == "(a,a)");
  CHECK(G.morphism_id(t[0][1]) == "(a,a)");
}

TEST_CASE("validation rejects broken tables") {
  RawGroupoid raw;
  raw.objects = {"e"};
  raw.morphisms = {{"1", "e", "e"}, {"g", "e", "e"}};
  raw.identities = {{"e", "1"}};
  raw.inv = {{"1", "1"}, {"g", "g"}};
  raw.comp = {{"1", "1", "1"}, {"1", "g", "g"}, {"g", "1", "g"}, {"g", "g", "1"}};
  CHECK_NOTHROW(FiniteGroupoid::make(raw));

  {
    RawGroupoid bad = raw;
    bad.comp.pop_back();
    CHECK_THROWS_WITH_AS(FiniteGroupoid::make(bad),
                         doctest::Contains("composition"), Error);
    try {
      FiniteGroupoid::make(bad);
    } catch (const Error& e) {
      CHECK(e.kind() == "MissingComposition");
    }
  }
  {
    // Z_2 x Z_2-ish table broken to be non-associative:
    // keep identity laws intact, break g*g
    RawGroupoid bad;
    bad.objects = {"e"};
    bad.morphisms = {{"1", "e", "e"}, {"a", "e", "e"}, {"b", "e", "e"},
                     {"c", "e", "e"}};
    bad.identities = {{"e", "1"}};
    bad.inv = {{"1", "1"}, {"a", "a"}, {"b", "b"}, {"c", "c"}};
    // Klein table with one cell corrupted: a*b = c changed to a*b = a
    auto put = [&](const char* x, const char* y, const char* z) {
      bad.comp.push_back({x, y, z});
    };
    put("1", "1", "1"); put("1", "a", "a"); put("1", "b", "b"); put("1", "c", "c");
    put("a", "1", "a"); put("a", "a", "1"); put("a", "b", "a"); put("a", "c", "b");
    put("b", "1", "b"); put("b", "a", "c"); put("b", "b", "1"); put("b", "c", "a");
    put("c", "1", "c"); put("c", "a", "b"); put("c", "b", "a"); put("c", "c", "1");
    try {
      FiniteGroupoid::make(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK((e.kind() == "NonAssociative" || e.kind() == "BadInverse"));
    }
  }
  {
    RawGroupoid bad = raw;
    bad.inv = {{"1", "1"}, {"g", "1"}};
    try {
      FiniteGroupoid::make(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == "BadInverse");
    }
  }
  {
    RawGroupoid bad = raw;
    bad.identities = {{"e", "g"}};
    try {
      FiniteGroupoid::make(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == "BadIdentity");
    }
  }
}

TEST_CASE("support subgroupoid") {
  FiniteGroupoid G = pair_groupoid({"1", "2", "3"});
  std::vector<char> keep(9, 0);
  for (const char* id : {"(1,1)", "(1,2)", "(2,1)", "(2,2)"})
    keep[G.morphism_index(id)] = 1;
  FiniteGroupoid S = G.support(keep);
  CHECK(S.n_objects() == 2);
  CHECK(S.n_morphisms() == 4);
  CHECK(S.compose(S.morphism_index("(1,2)"), S.morphism_index("(2,1)")) ==
        S.morphism_index("(1,1)"));

  std::vector<char> open(9, 0);
  open[G.morphism_index("(1,2)")] = 1;  // inverse missing
  open[G.morphism_index("(1,1)")] = 1;
  open[G.morphism_index("(2,2)")] = 1;
  try {
    G.support(open);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == "NotClosed");
  }
}

TEST_CASE("graph groupoid from components") {
  // v2 -> v1, v2 -> v3: one connected component, pair groupoid on 3 vertices
  FinGraph g = FinGraph::make({"v1", "v2", "v3"},
                              {{"f1", "v2", "v1"}, {"f2", "v2", "v3"}});
  FiniteGroupoid G = graph_groupoid(g);
  CHECK(G.n_objects() == 3);
  CHECK(G.n_morphisms() == 9);
  CHECK(G.compose(G.morphism_index("(v1,v2)"), G.morphism_index("(v2,v3)")) ==
        G.morphism_index("(v1,v3)"));

  // isolated vertex splits off its own component
  FinGraph h = FinGraph::make({"u", "v", "w"}, {{"e", "u", "v"}});
  FiniteGroupoid H = graph_groupoid(h);
  CHECK(H.n_morphisms() == 5);
  CHECK(H.compose(H.morphism_index("(u,v)"), H.morphism_index("(w,w)")) == -1);
}

TEST_CASE("graph validation and topological order") {
  FinGraph g = FinGraph::make({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}});
  CHECK(topo_order(g).has_value());
  FinGraph cyc = FinGraph::make({"a", "b"}, {{"e1", "a", "b"}, {"e2", "b", "a"}});
  CHECK(!topo_order(cyc).has_value());
  CHECK_THROWS_AS(FinGraph::make({"a"}, {{"e1", "a", "zzz"}}), Error);
}
