#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grograde/error.hpp"

namespace grograde {

// Unvalidated description of a finite groupoid: explicit objects, morphisms
// with endpoints, full composition table, inverse pairs, identity morphisms.
struct RawGroupoid {
  struct M {
    std::string id, dom, cod;
  };
  std::vector<std::string> objects;
  std::vector<M> morphisms;
  std::vector<std::array<std::string, 3>> comp;  // g after h: comp(g,h) = gh
  std::vector<std::array<std::string, 2>> inv;
  std::vector<std::pair<std::string, std::string>> identities;  // object, morphism
};

// Validated finite groupoid. Objects and morphisms are sorted by id, so all
// indices, tuple enumerations and reports are deterministic.
class FiniteGroupoid {
public:
  // Full validation: totality of the composition table on composable pairs,
  // endpoint coherence, associativity, identities, inverses.
  static FiniteGroupoid make(const RawGroupoid& raw);

  int n_objects() const { return (int)objects_.size(); }
  int n_morphisms() const { return (int)ids_.size(); }
  const std::string& object_id(int o) const { return objects_[o]; }
  const std::string& morphism_id(int g) const { return ids_[g]; }
  int object_index(const std::string& id) const;   // fails("BadReference")
  int morphism_index(const std::string& id) const; // fails("BadReference")
  int dom(int g) const { return dom_[g]; }
  int cod(int g) const { return cod_[g]; }
  bool composable(int g, int h) const { return dom_[g] == cod_[h]; }
  int compose(int g, int h) const { return comp_[(size_t)g * ids_.size() + h]; }
  int inv(int g) const { return inv_[g]; }
  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int g) const { return identity_[cod_[g]] == g; }

  // All composable n-tuples (g1,...,gn), dom(g_i) = cod(g_{i+1}), in
  // lexicographic order of morphism indices. n >= 1.
  std::vector<std::vector<int>> composable_tuples(int n) const;

  // Subgroupoid on a subset of morphisms (keep[g] != 0). The subset must be
  // closed under identities of touched objects, inverses and composition;
  // otherwise fails("NotClosed").
  FiniteGroupoid support(const std::vector<char>& keep) const;

  RawGroupoid to_raw() const;

private:
  std::vector<std::string> objects_, ids_;
  std::vector<int> dom_, cod_, inv_, identity_;
  std::vector<int> comp_;  // dense n x n, -1 where not composable
};

FiniteGroupoid one_object_group(int m);                       // cyclic Z_m
FiniteGroupoid pair_groupoid(const std::vector<std::string>& objs);
FiniteGroupoid matrix_groupoid(const std::vector<std::string>& objs, int m);

// Finite directed graph (parallel edges allowed). Vertices and edges are
// sorted by id on construction.
struct FinGraph {
  struct Edge {
    std::string id;
    int src, dst;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  static FinGraph make(
      const std::vector<std::string>& vertices,
      const std::vector<std::array<std::string, 3>>& edges);  // id, src, dst
  int vertex_index(const std::string& id) const;
  std::vector<int> out_edges(int v) const;
  bool is_sink(int v) const;
};

// None iff the graph has a directed cycle.
std::optional<std::vector<int>> topo_order(const FinGraph& g);

// Groupoid of vertex pairs connected by undirected walks: one pair groupoid
// per weakly connected component. Morphism ids are "(u,v)".
FiniteGroupoid graph_groupoid(const FinGraph& g);

}  // namespace grograde
