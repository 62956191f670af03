#include "grograde/leavitt.hpp"

#include <algorithm>
#include <map>

namespace grograde {

namespace {

struct Path {
  int src;
  int sink;
  std::vector<int> edges;
};

std::string path_key(const FinGraph& g, const Path& p) {
  std::string k = g.vertices[(size_t)p.src] + ":";
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (i) k += ".";
    k += g.edges[(size_t)p.edges[i]].id;
  }
  return k;
}

std::string leg_name(const FinGraph& g, const std::vector<int>& edges) {
  std::string s;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ".";
    s += g.edges[(size_t)edges[i]].id;
  }
  return s;
}

}  // namespace

LeavittAlgebra LeavittAlgebra::make(FinGraph graph, u32 p) {
  check(!graph.vertices.empty(), "BadArgument", "the graph has no vertices");
  check(topo_order(graph).has_value(), "CyclicGraph",
        "the graph has a directed cycle");
  int nv = (int)graph.vertices.size();

  // sink-ended paths per vertex, built from the sinks backwards
  auto order = *topo_order(graph);
  std::vector<std::vector<Path>> at((size_t)nv);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (graph.is_sink(v)) {
      at[(size_t)v].push_back({v, v, {}});
      continue;
    }
    for (int e : graph.out_edges(v))
      for (const Path& tail : at[(size_t)graph.edges[(size_t)e].dst]) {
        Path ext{v, tail.sink, {e}};
        ext.edges.insert(ext.edges.end(), tail.edges.begin(),
                         tail.edges.end());
        at[(size_t)v].push_back(std::move(ext));
      }
  }
  std::vector<Path> paths;
  for (int v = 0; v < nv; ++v)
    for (const auto& q : at[(size_t)v]) paths.push_back(q);
  std::sort(paths.begin(), paths.end(), [&](const Path& a, const Path& b) {
    return path_key(graph, a) < path_key(graph, b);
  });
  std::map<std::string, int> path_at_key;
  for (size_t i = 0; i < paths.size(); ++i)
    path_at_key[path_key(graph, paths[i])] = (int)i;
  std::vector<std::vector<int>> by_sink((size_t)nv);
  for (size_t i = 0; i < paths.size(); ++i)
    by_sink[(size_t)paths[i].sink].push_back((int)i);

  LeavittAlgebra L;
  std::map<std::pair<int, int>, int> mono_at;
  for (size_t a = 0; a < paths.size(); ++a)
    for (int b : by_sink[(size_t)paths[a].sink]) {
      mono_at[{(int)a, b}] = (int)L.monos_.size();
      L.monos_.push_back({paths[a].src, paths[(size_t)b].src, paths[a].sink,
                          paths[a].edges, paths[(size_t)b].edges});
    }
  int dim = (int)L.monos_.size();

  std::vector<ScEntry> sc;
  for (int t = 0; t < nv; ++t) {
    const auto& P = by_sink[(size_t)t];
    for (int a : P)
      for (int b : P)
        for (int c : P)
          sc.push_back({mono_at[{a, b}], mono_at[{b, c}], mono_at[{a, c}], 1});
  }
  Vec one((size_t)dim, 0);
  for (size_t a = 0; a < paths.size(); ++a)
    one[(size_t)mono_at[{(int)a, (int)a}]] = 1;

  auto G = graph_groupoid(graph);
  std::vector<int> deg((size_t)dim);
  for (int i = 0; i < dim; ++i)
    deg[(size_t)i] = G.morphism_index(
        "(" + graph.vertices[(size_t)L.monos_[(size_t)i].src_a] + "," +
        graph.vertices[(size_t)L.monos_[(size_t)i].src_b] + ")");
  L.graded_ = GradedAlgebra::make(StructAlgebra::make(p, dim, sc, one),
                                  std::move(G), std::move(deg));

  L.star_perm_.assign((size_t)dim, -1);
  for (const auto& [ab, i] : mono_at)
    L.star_perm_[(size_t)i] = mono_at[{ab.second, ab.first}];

  L.paths_from_.assign((size_t)nv, {});
  for (size_t a = 0; a < paths.size(); ++a)
    L.paths_from_[(size_t)paths[a].src].push_back(
        mono_at[{(int)a, (int)a}]);

  L.reach_.assign((size_t)nv, std::vector<char>((size_t)nv, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    L.reach_[(size_t)v][(size_t)v] = 1;
    for (int e : graph.out_edges(v)) {
      int w = graph.edges[(size_t)e].dst;
      for (int t = 0; t < nv; ++t)
        if (L.reach_[(size_t)w][(size_t)t]) L.reach_[(size_t)v][(size_t)t] = 1;
    }
  }

  for (size_t e = 0; e < graph.edges.size(); ++e) {
    Vec v((size_t)dim, 0);
    const auto& ed = graph.edges[e];
    for (const Path& tail : at[(size_t)ed.dst]) {
      Path ext{ed.src, tail.sink, {(int)e}};
      ext.edges.insert(ext.edges.end(), tail.edges.begin(), tail.edges.end());
      int pa = path_at_key[path_key(graph, ext)];
      int pb = path_at_key[path_key(graph, tail)];
      v[(size_t)mono_at[{pa, pb}]] = 1;
    }
    L.edge_vecs_.push_back(std::move(v));
  }

  L.graph_ = std::move(graph);
  return L;
}

std::string LeavittAlgebra::mono_name(int i) const {
  check(i >= 0 && i < dim(), "BadReference", "basis index out of range");
  const auto& m = monos_[(size_t)i];
  if (m.alpha.empty() && m.beta.empty()) return graph_.vertices[(size_t)m.sink];
  std::string s = leg_name(graph_, m.alpha);
  if (!m.beta.empty()) s += "(" + leg_name(graph_, m.beta) + ")*";
  return s;
}

Vec LeavittAlgebra::vertex_vec(int v) const {
  check(v >= 0 && v < (int)graph_.vertices.size(), "BadReference",
        "vertex index out of range");
  Vec out((size_t)dim(), 0);
  for (int d : paths_from_[(size_t)v]) out[(size_t)d] = 1;
  return out;
}

Vec LeavittAlgebra::edge_vec(int e) const {
  check(e >= 0 && e < (int)edge_vecs_.size(), "BadReference",
        "edge index out of range");
  return edge_vecs_[(size_t)e];
}

Vec LeavittAlgebra::ghost_vec(int e) const { return star(edge_vec(e)); }

Vec LeavittAlgebra::star(const Vec& x) const {
  check(x.size() == (size_t)dim(), "DimensionMismatch", "vector size");
  Vec out((size_t)dim(), 0);
  for (int i = 0; i < dim(); ++i)
    out[(size_t)star_perm_[(size_t)i]] = x[(size_t)i];
  return out;
}

Vec LeavittAlgebra::epsilon(int u, int v) const {
  int nv = (int)graph_.vertices.size();
  check(u >= 0 && u < nv && v >= 0 && v < nv, "BadReference",
        "vertex index out of range");
  const auto& G = graded_.groupoid();
  int g = G.morphism_index("(" + graph_.vertices[(size_t)u] + "," +
                           graph_.vertices[(size_t)v] + ")");
  auto W = graded_.component_product(g, G.inv(g));
  Vec uvec = vertex_vec(u);
  if (W.contains(uvec)) return uvec;
  Vec out((size_t)dim(), 0);
  for (int d : paths_from_[(size_t)u]) {
    int t = monos_[(size_t)d].sink;
    if (reach_[(size_t)v][(size_t)t]) out[(size_t)d] = 1;
  }
  return out;
}

std::vector<Vec> LeavittAlgebra::epsilons() const {
  const auto& G = graded_.groupoid();
  std::vector<Vec> out;
  for (int g = 0; g < G.n_morphisms(); ++g)
    out.push_back(epsilon(G.cod(g), G.dom(g)));
  return out;
}

}  // namespace grograde
