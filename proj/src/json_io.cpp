#include "grograde/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "grograde/util.hpp"

namespace grograde {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    fail("ParseError", what + ": missing key '" + key + "'");
  return j.at(key);
}

std::string str_of(const Json& v, const std::string& what) {
  if (!v.is_string()) fail("ParseError", what + ": expected a string");
  return v.get<std::string>();
}

long long int_of(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) fail("ParseError", what + ": expected an integer");
  return v.get<long long>();
}

std::vector<std::vector<int>> table_of(const Json& v, const std::string& what) {
  if (!v.is_array()) fail("ParseError", what + ": expected a table");
  std::vector<std::vector<int>> t;
  for (const auto& row : v) {
    if (!row.is_array()) fail("ParseError", what + ": ragged table row");
    std::vector<int> r;
    for (const auto& x : row) r.push_back((int)int_of(x, what));
    t.push_back(std::move(r));
  }
  return t;
}

int elem_index(const std::vector<std::string>& elems, const std::string& name,
               const std::string& what) {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == name) return (int)i;
  fail("ParseError", what + ": unknown element '" + name + "'");
  return -1;
}

std::vector<std::string> elems_of(const Json& j, const std::string& what) {
  std::vector<std::string> elems;
  for (const auto& e : field(j, "elems", what)) elems.push_back(str_of(e, what));
  return elems;
}

std::string dir_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

// component values may be inline objects or paths relative to the file
Json resolve(const Json& v, const std::string& base_dir,
             const std::string& what) {
  if (v.is_object()) return v;
  std::string p = str_of(v, what);
  if (!p.empty() && p[0] != '/') p = base_dir + "/" + p;
  return parse_json(read_file(p), p);
}

void render(const Json& v, int indent, std::ostringstream& out) {
  std::string pad((size_t)indent, ' ');
  if (v.is_object()) {
    for (const auto& [k, val] : v.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() &&
                              (val.front().is_object() || val.front().is_array()))) {
        out << pad << k << ":\n";
        render(val, indent + 2, out);
      } else {
        out << pad << k << ": "
            << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& val : v) {
      if (val.is_object() || val.is_array()) {
        out << pad << "-\n";
        render(val, indent + 2, out);
      } else {
        out << pad << "- "
            << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  } else {
    out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("FileError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("FileError", "cannot write " + path);
  out << text;
  check((bool)out, "FileError", "write failed for " + path);
}

Json parse_json(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("ParseError", what + ": invalid JSON");
  return j;
}

RawGroupoid groupoid_from_json(const Json& j) {
  const std::string what = "groupoid";
  RawGroupoid raw;
  for (const auto& o : field(j, "objects", what))
    raw.objects.push_back(str_of(o, what));
  for (const auto& m : field(j, "morphisms", what))
    raw.morphisms.push_back({str_of(field(m, "id", what), what),
                             str_of(field(m, "dom", what), what),
                             str_of(field(m, "cod", what), what)});
  for (const auto& c : field(j, "comp", what)) {
    if (!c.is_array() || c.size() != 3)
      fail("ParseError", what + ": comp entries are [g, h, gh]");
    raw.comp.push_back({str_of(c[0], what), str_of(c[1], what),
                        str_of(c[2], what)});
  }
  for (const auto& p : field(j, "inv", what)) {
    if (!p.is_array() || p.size() != 2)
      fail("ParseError", what + ": inv entries are [g, g_inverse]");
    raw.inv.push_back({str_of(p[0], what), str_of(p[1], what)});
  }
  for (const auto& [obj, m] : field(j, "identities", what).items())
    raw.identities.push_back({obj, str_of(m, what)});
  return raw;
}

Json groupoid_to_json(const FiniteGroupoid& G) {
  RawGroupoid raw = G.to_raw();
  Json j;
  j["objects"] = raw.objects;
  Json ms = Json::array();
  for (const auto& m : raw.morphisms)
    ms.push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["morphisms"] = ms;
  Json cs = Json::array();
  for (const auto& c : raw.comp) cs.push_back({c[0], c[1], c[2]});
  j["comp"] = cs;
  Json is = Json::array();
  for (const auto& p : raw.inv) is.push_back({p[0], p[1]});
  j["inv"] = is;
  Json ids = Json::object();
  for (const auto& [obj, m] : raw.identities) ids[obj] = m;
  j["identities"] = ids;
  return j;
}

bool is_ring_json(const Json& j) { return j.is_object() && j.contains("add"); }

FiniteCommRing ring_from_json(const Json& j) {
  const std::string what = "ring";
  auto elems = elems_of(j, what);
  auto add = table_of(field(j, "add", what), what + " add");
  auto mul = table_of(field(j, "mul", what), what + " mul");
  int zero = elem_index(elems, str_of(field(j, "zero", what), what), what);
  int one = elem_index(elems, str_of(field(j, "one", what), what), what);
  return FiniteCommRing::make(std::move(elems), std::move(add), std::move(mul),
                              zero, one);
}

FiniteCommMonoid monoid_from_json(const Json& j) {
  const std::string what = "monoid";
  auto elems = elems_of(j, what);
  auto mul = table_of(field(j, "mul", what), what + " mul");
  int one = elem_index(elems, str_of(field(j, "one", what), what), what);
  return FiniteCommMonoid::make(std::move(elems), std::move(mul), one);
}

Json ring_to_json(const FiniteCommRing& R) {
  Json j;
  Json elems = Json::array();
  for (int i = 0; i < R.size(); ++i) elems.push_back(R.elem(i));
  j["elems"] = elems;
  Json add = Json::array(), mul = Json::array();
  for (int a = 0; a < R.size(); ++a) {
    Json ra = Json::array(), rm = Json::array();
    for (int b = 0; b < R.size(); ++b) {
      ra.push_back(R.add(a, b));
      rm.push_back(R.mul(a, b));
    }
    add.push_back(ra);
    mul.push_back(rm);
  }
  j["add"] = add;
  j["mul"] = mul;
  j["zero"] = R.elem(R.zero());
  j["one"] = R.elem(R.one());
  return j;
}

Json monoid_to_json(const FiniteCommMonoid& M) {
  Json j;
  Json elems = Json::array();
  for (int i = 0; i < M.size(); ++i) elems.push_back(M.elem(i));
  j["elems"] = elems;
  Json mul = Json::array();
  for (int a = 0; a < M.size(); ++a) {
    Json rm = Json::array();
    for (int b = 0; b < M.size(); ++b) rm.push_back(M.mul(a, b));
    mul.push_back(rm);
  }
  j["mul"] = mul;
  j["one"] = M.elem(M.one());
  return j;
}

AlgebraFile algebra_from_json(const Json& j) {
  const std::string what = "algebra";
  AlgebraFile f;
  u32 p = (u32)int_of(field(j, "p", what), what);
  int dim = (int)int_of(field(j, "dim", what), what);
  std::vector<ScEntry> sc;
  for (const auto& e : field(j, "sc", what)) {
    if (!e.is_array() || e.size() != 4)
      fail("ParseError", what + ": sc entries are [i, j, k, v]");
    sc.push_back({(int)int_of(e[0], what), (int)int_of(e[1], what),
                  (int)int_of(e[2], what), (u32)int_of(e[3], what)});
  }
  Vec one;
  for (const auto& x : field(j, "one", what)) one.push_back((u32)int_of(x, what));
  f.alg = StructAlgebra::make(p, dim, std::move(sc), std::move(one));
  if (j.contains("deg"))
    for (const auto& d : j.at("deg")) f.deg.push_back(str_of(d, what));
  if (j.contains("groupoid")) f.groupoid = groupoid_from_json(j.at("groupoid"));
  if (j.contains("basis"))
    for (const auto& b : j.at("basis")) f.basis.push_back(str_of(b, what));
  return f;
}

Json algebra_to_json(const GradedAlgebra& A, bool embed_groupoid,
                     const std::vector<std::string>& basis_names) {
  Json j;
  j["p"] = A.alg().p();
  j["dim"] = A.alg().dim();
  Json sc = Json::array();
  for (int i = 0; i < A.alg().dim(); ++i)
    for (int k = 0; k < A.alg().dim(); ++k)
      for (const auto& [b, v] : A.alg().basis_prod(i, k))
        sc.push_back({i, k, b, v});
  j["sc"] = sc;
  j["one"] = A.alg().one();
  Json deg = Json::array();
  for (int i = 0; i < A.alg().dim(); ++i)
    deg.push_back(A.groupoid().morphism_id(A.deg(i)));
  j["deg"] = deg;
  if (!basis_names.empty()) j["basis"] = basis_names;
  if (embed_groupoid) j["groupoid"] = groupoid_to_json(A.groupoid());
  return j;
}

namespace {

// shared loader for actions and modules; the monoid flag drops add tables
struct Carrier {
  FiniteGroupoid G;
  std::vector<FiniteCommRing> rings;
  std::vector<FiniteCommMonoid> monoids;
  std::vector<int> idem;
  std::vector<std::vector<int>> theta;
  bool monoid = false;
};

Carrier carrier_from_json(const Json& j, const std::string& base_dir,
                          bool as_module) {
  const std::string what = as_module ? "module" : "action";
  Carrier c;
  c.G = FiniteGroupoid::make(
      groupoid_from_json(resolve(field(j, "groupoid", what), base_dir, what)));
  const Json& comps = field(j, "components", what);
  auto size_at = [&](int o) {
    return c.monoid ? c.monoids[(size_t)o].size() : c.rings[(size_t)o].size();
  };
  auto index_at = [&](int o, const std::string& name) {
    return c.monoid ? c.monoids[(size_t)o].index(name)
                    : c.rings[(size_t)o].index(name);
  };
  for (int o = 0; o < c.G.n_objects(); ++o) {
    const std::string& id = c.G.object_id(o);
    if (!comps.contains(id))
      fail("ParseError", what + ": no component for object '" + id + "'");
    Json cj = resolve(comps.at(id), base_dir, what);
    if (o == 0) c.monoid = as_module && !is_ring_json(cj);
    if (c.monoid)
      c.monoids.push_back(monoid_from_json(cj));
    else
      c.rings.push_back(ring_from_json(cj));
  }
  if (as_module && !c.monoid) {
    for (const auto& r : c.rings) c.monoids.push_back(r.mul_monoid());
    c.monoid = true;
  }
  const Json& idem = field(j, "idem", what);
  const Json& theta = field(j, "theta", what);
  c.idem.resize((size_t)c.G.n_morphisms());
  c.theta.resize((size_t)c.G.n_morphisms());
  for (int g = 0; g < c.G.n_morphisms(); ++g) {
    const std::string& gid = c.G.morphism_id(g);
    if (!idem.contains(gid))
      fail("ParseError", what + ": idem misses morphism '" + gid + "'");
    c.idem[(size_t)g] = index_at(c.G.cod(g), str_of(idem.at(gid), what));
    c.theta[(size_t)g].assign((size_t)size_at(c.G.dom(g)), -1);
    if (!theta.contains(gid))
      fail("ParseError", what + ": theta misses morphism '" + gid + "'");
    for (const auto& [from, to] : theta.at(gid).items())
      c.theta[(size_t)g][(size_t)index_at(c.G.dom(g), from)] =
          index_at(c.G.cod(g), str_of(to, what));
  }
  return c;
}

}  // namespace

PartialRingAction action_from_json(const Json& j,
                                   const std::string& base_dir) {
  Carrier c = carrier_from_json(j, base_dir, false);
  return validate_action(std::move(c.G), std::move(c.rings),
                         std::move(c.idem), std::move(c.theta));
}

PartialGModule module_from_json(const Json& j, const std::string& base_dir) {
  Carrier c = carrier_from_json(j, base_dir, true);
  return validate_module(std::move(c.G), std::move(c.monoids),
                         std::move(c.idem), std::move(c.theta));
}

namespace {

template <typename Comp, typename ToJson>
Json carrier_to_json(const FiniteGroupoid& G, const std::vector<Comp>& comp,
                     const std::vector<int>& idem,
                     const std::vector<std::vector<int>>& theta,
                     ToJson to_json) {
  Json j;
  j["groupoid"] = groupoid_to_json(G);
  Json comps = Json::object();
  for (int o = 0; o < G.n_objects(); ++o)
    comps[G.object_id(o)] = to_json(comp[(size_t)o]);
  j["components"] = comps;
  Json idem_j = Json::object(), theta_j = Json::object();
  for (int g = 0; g < G.n_morphisms(); ++g) {
    idem_j[G.morphism_id(g)] =
        comp[(size_t)G.cod(g)].elem(idem[(size_t)g]);
    Json t = Json::object();
    const auto& tg = theta[(size_t)g];
    for (size_t x = 0; x < tg.size(); ++x)
      if (tg[x] >= 0)
        t[comp[(size_t)G.dom(g)].elem((int)x)] =
            comp[(size_t)G.cod(g)].elem(tg[x]);
    theta_j[G.morphism_id(g)] = t;
  }
  j["idem"] = idem_j;
  j["theta"] = theta_j;
  return j;
}

}  // namespace

Json action_to_json(const PartialRingAction& act) {
  return carrier_to_json(act.G, act.comp, act.idem, act.theta,
                         [](const FiniteCommRing& r) { return ring_to_json(r); });
}

Json module_to_json(const PartialGModule& mod) {
  return carrier_to_json(mod.G, mod.comp, mod.idem, mod.theta,
                         [](const FiniteCommMonoid& m) {
                           return monoid_to_json(m);
                         });
}

FinGraph graph_from_json(const Json& j) {
  const std::string what = "graph";
  std::vector<std::string> vertices;
  for (const auto& v : field(j, "vertices", what))
    vertices.push_back(str_of(v, what));
  std::vector<std::array<std::string, 3>> edges;
  for (const auto& e : field(j, "edges", what))
    edges.push_back({str_of(field(e, "id", what), what),
                     str_of(field(e, "src", what), what),
                     str_of(field(e, "dst", what), what)});
  return FinGraph::make(vertices, edges);
}

bool input_error_kind(const std::string& kind) {
  static const std::set<std::string> kinds = {
      "FileError",   "ParseError",  "BadReference",
      "BadArgument", "BadTable",    "DuplicateId",
      "CapExceeded", "SearchSpaceExceeded"};
  return kinds.count(kind) > 0;
}

void Report::add_input(const std::string& path, const std::string& bytes) {
  inputs.emplace_back(path, "fnv1a:" + fnv1a_hex(bytes));
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  Json in = Json::object();
  for (const auto& [p, d] : inputs) in[p] = d;
  j["inputs"] = in;
  j["verdicts"] = verdicts;
  j["witnesses"] = witnesses;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  for (const auto& [p, d] : inputs) out << "input: " << p << " (" << d << ")\n";
  out << "verdicts:\n";
  render(verdicts, 2, out);
  if (!witnesses.empty()) {
    out << "witnesses:\n";
    render(witnesses, 2, out);
  }
  return out.str();
}

}  // namespace grograde
