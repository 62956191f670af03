// Regenerates the sample inputs under data/. Run from the repository root:
//   build/gen_corpus [outdir]
#include <cstdio>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "grograde/json_io.hpp"
#include "grograde/skew.hpp"

using namespace grograde;

namespace {

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

// F_3[Z_2], graded by the two-element group.
GradedAlgebra z3z2() {
  return GradedAlgebra::make(from_table(3,
                                        {{{1, 0}, {0, 1}},
                                         {{0, 1}, {1, 0}}},
                                        {1, 0}),
                             one_object_group(2), {0, 1});
}

// M_2(Z_2) over the 2x2 matrix groupoid with cyclic part Z_4; only four
// degrees carry a nonzero component, so the grading is epsilon-strong but
// not strong.
GradedAlgebra morita2() {
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, Vec(4, 0)));
  auto idx = [](int r, int c) { return 2 * r + c; };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          if (c == r2)
            t[(size_t)idx(r, c)][(size_t)idx(r2, c2)][(size_t)idx(r, c2)] = 1;
  auto G = matrix_groupoid({"1", "2"}, 4);
  std::vector<int> deg = {
      G.morphism_index("(1,g^0,1)"),
      G.morphism_index("(1,g^1,2)"),
      G.morphism_index("(2,g^3,1)"),
      G.morphism_index("(2,g^0,2)"),
  };
  return GradedAlgebra::make(from_table(2, t, {1, 0, 0, 1}), std::move(G),
                             std::move(deg));
}

// Global Z_2 action on Z_3 x Z_3 swapping the coordinates.
PartialRingAction swap_action() {
  auto R = ring_product(zn(3), zn(3), "a", "b");
  std::vector<int> id_map((size_t)R.size());
  std::vector<int> swap((size_t)R.size());
  for (int i = 0; i < R.size(); ++i) {
    id_map[(size_t)i] = i;
    const auto& nm = R.elem(i);  // "ai|bj"
    swap[(size_t)i] = R.index(std::string("a") + nm[4] + "|b" + nm[1]);
  }
  return validate_action(one_object_group(2), {R}, {R.one(), R.one()},
                         {id_map, swap});
}

// Partial Z_2 action on Z_2 x Z_2: defined only on the first factor.
PartialRingAction first_coord_action() {
  auto R = ring_product(zn(2), zn(2), "a", "b");
  int e1 = R.index("a1|b0");
  std::vector<int> full((size_t)R.size());
  for (int i = 0; i < R.size(); ++i) full[(size_t)i] = i;
  std::vector<int> part((size_t)R.size(), -1);
  for (int x : R.ideal_of(e1)) part[(size_t)x] = x;
  return validate_action(one_object_group(2), {R}, {R.one(), e1},
                         {full, part});
}

// Trivial Z_2 module on the multiplicative monoid of Z_3.
PartialGModule z3_units_module() {
  auto M = zn(3).mul_monoid();
  std::vector<int> full((size_t)M.size());
  for (int i = 0; i < M.size(); ++i) full[(size_t)i] = i;
  return validate_module(one_object_group(2), {M}, {M.one(), M.one()},
                         {full, full});
}

void emit(const std::string& dir, const std::string& name, const Json& j) {
  write_file(dir + "/" + name, j.dump(2) + "\n");
  std::printf("wrote %s/%s\n", dir.c_str(), name.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);

  Json graph = Json::object();
  graph["vertices"] = Json::array({"v1", "v2", "v3"});
  Json edges = Json::array();
  for (auto [id, src, dst] : {std::tuple{"f1", "v2", "v1"},
                              std::tuple{"f2", "v2", "v3"}}) {
    Json e = Json::object();
    e["id"] = id;
    e["src"] = src;
    e["dst"] = dst;
    edges.push_back(e);
  }
  graph["edges"] = edges;
  emit(dir, "threeline.graph.json", graph);

  emit(dir, "z6.ring.json", ring_to_json(zn(6)));
  emit(dir, "pair3.gpd.json", groupoid_to_json(pair_groupoid({"x", "y", "z"})));
  emit(dir, "z3z2.alg.json", algebra_to_json(z3z2(), true, {"u", "s"}));
  emit(dir, "morita_m2.alg.json",
       algebra_to_json(morita2(), true, {"E11", "E12", "E21", "E22"}));
  emit(dir, "swap_global.act.json", action_to_json(swap_action()));
  emit(dir, "firstcoord_partial.act.json",
       action_to_json(first_coord_action()));
  emit(dir, "z3units_z2.mod.json", module_to_json(z3_units_module()));
  return 0;
}
