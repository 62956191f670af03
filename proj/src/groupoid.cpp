#include "grograde/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grograde {

static int lookup(const std::vector<std::string>& ids, const std::string& id,
                  const char* what) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id)
    fail("BadReference", std::string("unknown ") + what + " id: " + id);
  return (int)(it - ids.begin());
}

int FiniteGroupoid::object_index(const std::string& id) const {
  return lookup(objects_, id, "object");
}

int FiniteGroupoid::morphism_index(const std::string& id) const {
  return lookup(ids_, id, "morphism");
}

FiniteGroupoid FiniteGroupoid::make(const RawGroupoid& raw) {
  FiniteGroupoid G;
  G.objects_ = raw.objects;
  std::sort(G.objects_.begin(), G.objects_.end());
  check(!G.objects_.empty(), "BadIdentity", "groupoid has no objects");
  check(std::adjacent_find(G.objects_.begin(), G.objects_.end()) ==
            G.objects_.end(),
        "DuplicateId", "duplicate object id");

  std::vector<RawGroupoid::M> ms = raw.morphisms;
  std::sort(ms.begin(), ms.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  size_t n = ms.size();
  for (size_t i = 0; i + 1 < n; ++i)
    check(ms[i].id != ms[i + 1].id, "DuplicateId",
          "duplicate morphism id: " + ms[i].id);
  for (auto& m : ms) {
    check(!m.id.empty(), "DuplicateId", "empty morphism id");
    G.ids_.push_back(m.id);
    G.dom_.push_back(lookup(G.objects_, m.dom, "object"));
    G.cod_.push_back(lookup(G.objects_, m.cod, "object"));
  }

  G.comp_.assign(n * n, -1);
  for (const auto& c : raw.comp) {
    int g = G.morphism_index(c[0]), h = G.morphism_index(c[1]),
        gh = G.morphism_index(c[2]);
    check(G.dom_[g] == G.cod_[h], "BadComposition",
          "composition given for non-composable pair (" + c[0] + ", " + c[1] +
              ")");
    check(G.comp_[(size_t)g * n + h] == -1, "BadComposition",
          "duplicate composition entry (" + c[0] + ", " + c[1] + ")");
    G.comp_[(size_t)g * n + h] = gh;
  }
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h) {
      if (G.dom_[g] != G.cod_[h]) continue;
      int gh = G.comp_[g * n + h];
      check(gh >= 0, "MissingComposition",
            "missing composition for composable pair (" + G.ids_[g] + ", " +
                G.ids_[h] + ")");
      check(G.cod_[gh] == G.cod_[g] && G.dom_[gh] == G.dom_[h],
            "BadComposition",
            "composite endpoints mismatch at (" + G.ids_[g] + ", " + G.ids_[h] +
                ")");
    }
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h) {
      if (G.dom_[g] != G.cod_[h]) continue;
      int gh = G.comp_[g * n + h];
      for (size_t k = 0; k < n; ++k) {
        if (G.dom_[h] != G.cod_[k]) continue;
        int hk = G.comp_[h * n + k];
        check(G.comp_[(size_t)gh * n + k] == G.comp_[g * n + hk],
              "NonAssociative",
              "associativity fails at (" + G.ids_[g] + ", " + G.ids_[h] + ", " +
                  G.ids_[k] + ")");
      }
    }

  G.identity_.assign(G.objects_.size(), -1);
  for (const auto& [obj, mid] : raw.identities) {
    int o = G.object_index(obj), e = G.morphism_index(mid);
    check(G.identity_[o] == -1, "BadIdentity", "duplicate identity for " + obj);
    G.identity_[o] = e;
  }
  for (size_t o = 0; o < G.objects_.size(); ++o) {
    int e = G.identity_[o];
    check(e >= 0, "BadIdentity", "no identity morphism for " + G.objects_[o]);
    check(G.dom_[e] == (int)o && G.cod_[e] == (int)o, "BadIdentity",
          "identity endpoints wrong at " + G.objects_[o]);
  }
  for (size_t g = 0; g < n; ++g) {
    check(G.comp_[(size_t)G.identity_[G.cod_[g]] * n + g] == (int)g &&
              G.comp_[g * n + G.identity_[G.dom_[g]]] == (int)g,
          "BadIdentity", "identity law fails at " + G.ids_[g]);
  }

  G.inv_.assign(n, -1);
  for (const auto& [a, b] : raw.inv) {
    int g = G.morphism_index(a), gi = G.morphism_index(b);
    check(G.inv_[g] == -1, "BadInverse", "duplicate inverse entry for " + a);
    G.inv_[g] = gi;
  }
  for (size_t g = 0; g < n; ++g) {
    int gi = G.inv_[g];
    check(gi >= 0, "BadInverse", "no inverse listed for " + G.ids_[g]);
    check(G.dom_[gi] == G.cod_[g] && G.cod_[gi] == G.dom_[g], "BadInverse",
          "inverse endpoints wrong at " + G.ids_[g]);
    check(G.comp_[g * n + gi] == G.identity_[G.cod_[g]] &&
              G.comp_[(size_t)gi * n + g] == G.identity_[G.dom_[g]],
          "BadInverse", "inverse law fails at " + G.ids_[g]);
  }
  return G;
}

std::vector<std::vector<int>> FiniteGroupoid::composable_tuples(int n) const {
  check(n >= 1, "BadArgument", "tuple length must be >= 1");
  std::vector<std::vector<int>> by_cod(objects_.size());
  for (int g = 0; g < n_morphisms(); ++g) by_cod[cod_[g]].push_back(g);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back(cur);
      return;
    }
    if (depth == 0) {
      for (int g = 0; g < n_morphisms(); ++g) {
        cur.push_back(g);
        self(self, 1);
        cur.pop_back();
      }
    } else {
      for (int h : by_cod[dom_[cur.back()]]) {
        cur.push_back(h);
        self(self, depth + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

FiniteGroupoid FiniteGroupoid::support(const std::vector<char>& keep) const {
  check((int)keep.size() == n_morphisms(), "BadArgument", "keep size");
  size_t n = ids_.size();
  std::set<int> objs;
  for (size_t g = 0; g < n; ++g)
    if (keep[g]) {
      objs.insert(dom_[g]);
      objs.insert(cod_[g]);
    }
  for (int o : objs)
    check(keep[identity_[o]], "NotClosed",
          "support misses identity at " + objects_[o]);
  for (size_t g = 0; g < n; ++g) {
    if (!keep[g]) continue;
    check(keep[inv_[g]], "NotClosed",
          "support misses inverse of " + ids_[g]);
    for (size_t h = 0; h < n; ++h)
      if (keep[h] && dom_[g] == cod_[h])
        check(keep[comp_[g * n + h]], "NotClosed",
              "support misses composite of (" + ids_[g] + ", " + ids_[h] + ")");
  }
  RawGroupoid raw;
  for (int o : objs) raw.objects.push_back(objects_[o]);
  for (size_t g = 0; g < n; ++g)
    if (keep[g])
      raw.morphisms.push_back({ids_[g], objects_[dom_[g]], objects_[cod_[g]]});
  for (size_t g = 0; g < n; ++g) {
    if (!keep[g]) continue;
    raw.inv.push_back({ids_[g], ids_[inv_[g]]});
    for (size_t h = 0; h < n; ++h)
      if (keep[h] && dom_[g] == cod_[h])
        raw.comp.push_back({ids_[g], ids_[h], ids_[comp_[g * n + h]]});
  }
  for (int o : objs) raw.identities.push_back({objects_[o], ids_[identity_[o]]});
  return make(raw);
}

RawGroupoid FiniteGroupoid::to_raw() const {
  RawGroupoid raw;
  raw.objects = objects_;
  size_t n = ids_.size();
  for (size_t g = 0; g < n; ++g)
    raw.morphisms.push_back({ids_[g], objects_[dom_[g]], objects_[cod_[g]]});
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      if (comp_[g * n + h] >= 0)
        raw.comp.push_back({ids_[g], ids_[h], ids_[comp_[g * n + h]]});
  for (size_t g = 0; g < n; ++g) raw.inv.push_back({ids_[g], ids_[inv_[g]]});
  for (size_t o = 0; o < objects_.size(); ++o)
    raw.identities.push_back({objects_[o], ids_[identity_[o]]});
  return raw;
}

FiniteGroupoid one_object_group(int m) {
  check(m >= 1, "BadArgument", "group order must be >= 1");
  RawGroupoid raw;
  raw.objects = {"e"};
  auto name = [](int k) { return "g^" + std::to_string(k); };
  for (int k = 0; k < m; ++k) raw.morphisms.push_back({name(k), "e", "e"});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      raw.comp.push_back({name(a), name(b), name((a + b) % m)});
  for (int a = 0; a < m; ++a) raw.inv.push_back({name(a), name((m - a) % m)});
  raw.identities = {{"e", name(0)}};
  return FiniteGroupoid::make(raw);
}

static std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

FiniteGroupoid pair_groupoid(const std::vector<std::string>& objs) {
  RawGroupoid raw;
  raw.objects = objs;
  for (const auto& a : objs)
    for (const auto& b : objs) raw.morphisms.push_back({pair_id(a, b), b, a});
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs)
        raw.comp.push_back({pair_id(a, b), pair_id(b, c), pair_id(a, c)});
  for (const auto& a : objs)
    for (const auto& b : objs)
      raw.inv.push_back({pair_id(a, b), pair_id(b, a)});
  for (const auto& a : objs) raw.identities.push_back({a, pair_id(a, a)});
  return FiniteGroupoid::make(raw);
}

FiniteGroupoid matrix_groupoid(const std::vector<std::string>& objs, int m) {
  check(m >= 1, "BadArgument", "cyclic order must be >= 1");
  RawGroupoid raw;
  raw.objects = objs;
  auto name = [](const std::string& i, int k, const std::string& j) {
    return "(" + i + ",g^" + std::to_string(k) + "," + j + ")";
  };
  for (const auto& i : objs)
    for (int k = 0; k < m; ++k)
      for (const auto& j : objs) raw.morphisms.push_back({name(i, k, j), j, i});
  for (const auto& i : objs)
    for (const auto& j : objs)
      for (const auto& l : objs)
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            raw.comp.push_back(
                {name(i, a, j), name(j, b, l), name(i, (a + b) % m, l)});
  for (const auto& i : objs)
    for (const auto& j : objs)
      for (int a = 0; a < m; ++a)
        raw.inv.push_back({name(i, a, j), name(j, (m - a) % m, i)});
  for (const auto& i : objs) raw.identities.push_back({i, name(i, 0, i)});
  return FiniteGroupoid::make(raw);
}

FinGraph FinGraph::make(const std::vector<std::string>& vertices,
                        const std::vector<std::array<std::string, 3>>& edges) {
  FinGraph g;
  g.vertices = vertices;
  std::sort(g.vertices.begin(), g.vertices.end());
  check(std::adjacent_find(g.vertices.begin(), g.vertices.end()) ==
            g.vertices.end(),
        "DuplicateId", "duplicate vertex id");
  std::vector<std::array<std::string, 3>> es = edges;
  std::sort(es.begin(), es.end());
  for (size_t i = 0; i + 1 < es.size(); ++i)
    check(es[i][0] != es[i + 1][0], "DuplicateId",
          "duplicate edge id: " + es[i][0]);
  for (const auto& e : es)
    g.edges.push_back({e[0], lookup(g.vertices, e[1], "vertex"),
                       lookup(g.vertices, e[2], "vertex")});
  return g;
}

int FinGraph::vertex_index(const std::string& id) const {
  return lookup(vertices, id, "vertex");
}

std::vector<int> FinGraph::out_edges(int v) const {
  std::vector<int> out;
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].src == v) out.push_back((int)i);
  return out;
}

bool FinGraph::is_sink(int v) const { return out_edges(v).empty(); }

std::optional<std::vector<int>> topo_order(const FinGraph& g) {
  size_t n = g.vertices.size();
  std::vector<int> indeg(n, 0), order;
  for (const auto& e : g.edges) indeg[e.dst]++;
  std::vector<int> ready;
  for (size_t v = 0; v < n; ++v)
    if (!indeg[v]) ready.push_back((int)v);
  while (!ready.empty()) {
    int v = ready.front();
    ready.erase(ready.begin());
    order.push_back(v);
    for (const auto& e : g.edges)
      if (e.src == v && --indeg[e.dst] == 0) ready.push_back(e.dst);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

FiniteGroupoid graph_groupoid(const FinGraph& g) {
  size_t n = g.vertices.size();
  std::vector<int> comp(n);
  for (size_t v = 0; v < n; ++v) comp[v] = (int)v;
  // union-find over undirected reachability
  std::function<int(int)> find = [&](int v) {
    return comp[v] == v ? v : comp[v] = find(comp[v]);
  };
  for (const auto& e : g.edges) comp[find(e.src)] = find(e.dst);
  RawGroupoid raw;
  raw.objects = g.vertices;
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) {
      if (find((int)u) != find((int)v)) continue;
      raw.morphisms.push_back(
          {pair_id(g.vertices[u], g.vertices[v]), g.vertices[v], g.vertices[u]});
    }
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) {
      if (find((int)u) != find((int)v)) continue;
      raw.inv.push_back({pair_id(g.vertices[u], g.vertices[v]),
                         pair_id(g.vertices[v], g.vertices[u])});
      for (size_t w = 0; w < n; ++w)
        if (find((int)v) == find((int)w))
          raw.comp.push_back({pair_id(g.vertices[u], g.vertices[v]),
                              pair_id(g.vertices[v], g.vertices[w]),
                              pair_id(g.vertices[u], g.vertices[w])});
    }
  for (size_t v = 0; v < n; ++v)
    raw.identities.push_back(
        {g.vertices[v], pair_id(g.vertices[v], g.vertices[v])});
  return FiniteGroupoid::make(raw);
}

}  // namespace grograde
