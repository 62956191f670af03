#include "grograde/cohomology.hpp"

#include <algorithm>
#include <set>

namespace grograde {

namespace {

std::vector<int> monoid_image(const std::vector<int>& theta,
                              const std::vector<int>& ideal) {
  std::vector<int> img;
  img.reserve(ideal.size());
  for (int x : ideal) img.push_back(theta[(size_t)x]);
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace

PartialGModule validate_module(FiniteGroupoid G,
                               std::vector<FiniteCommMonoid> comp,
                               std::vector<int> idem,
                               std::vector<std::vector<int>> theta) {
  int n = G.n_morphisms();
  check((int)comp.size() == G.n_objects(), "DimensionMismatch",
        "expected one monoid component per object");
  check((int)idem.size() == n && (int)theta.size() == n, "DimensionMismatch",
        "expected one idempotent and one theta table per morphism");

  for (int g = 0; g < n; ++g) {
    const auto& C = comp[(size_t)G.cod(g)];
    const auto& D = comp[(size_t)G.dom(g)];
    check(idem[(size_t)g] >= 0 && idem[(size_t)g] < C.size(), "BadReference",
          "idempotent index for " + G.morphism_id(g) + " is out of range");
    check(C.is_idempotent(idem[(size_t)g]), "NotIdempotent",
          "1_g for g = " + G.morphism_id(g) + " is not idempotent");
    check((int)theta[(size_t)g].size() == D.size(), "DimensionMismatch",
          "theta table for " + G.morphism_id(g) +
              " must cover the whole domain component");
  }

  for (int o = 0; o < G.n_objects(); ++o) {
    int e = G.identity(o);
    check(idem[(size_t)e] == comp[(size_t)o].one(), "G1Violation",
          "G1: the idempotent at the identity morphism " + G.morphism_id(e) +
              " must be the monoid identity");
    for (int x = 0; x < comp[(size_t)o].size(); ++x)
      check(theta[(size_t)e][(size_t)x] == x, "G1Violation",
            "G1: theta at the identity morphism " + G.morphism_id(e) +
                " must fix the whole component");
  }

  for (int g = 0; g < n; ++g) {
    const auto& t = theta[(size_t)g];
    const auto& D = comp[(size_t)G.dom(g)];
    const auto& C = comp[(size_t)G.cod(g)];
    auto bad = [&](const std::string& why) {
      fail("NotMonoidIso", "theta at " + G.morphism_id(g) +
                               " is not a monoid isomorphism between the "
                               "ideals of 1_{g^-1} and 1_g: " +
                               why);
    };
    auto dom_ideal = D.ideal_elems(idem[(size_t)G.inv(g)]);
    std::vector<char> in_dom((size_t)D.size(), 0);
    for (int x : dom_ideal) in_dom[(size_t)x] = 1;
    for (int x = 0; x < D.size(); ++x) {
      if ((t[(size_t)x] >= 0) != (bool)in_dom[(size_t)x])
        bad("defined exactly on the ideal of 1_{g^-1} is required, wrong at " +
            D.elem(x));
      if (t[(size_t)x] >= C.size()) bad("value out of range at " + D.elem(x));
    }
    if (monoid_image(t, dom_ideal) != C.ideal_elems(idem[(size_t)g]))
      bad("the image is not the ideal of 1_g");
    for (int x : dom_ideal)
      for (int y : dom_ideal)
        if (t[(size_t)D.mul(x, y)] != C.mul(t[(size_t)x], t[(size_t)y]))
          bad("not multiplicative at " + D.elem(x) + " * " + D.elem(y));
    if (t[(size_t)idem[(size_t)G.inv(g)]] != idem[(size_t)g])
      bad("1_{g^-1} must map to 1_g");
  }

  for (const auto& pr : G.composable_tuples(2)) {
    int g = pr[0], h = pr[1], gh = G.compose(g, h);
    const auto& D = comp[(size_t)G.dom(g)];
    const auto& C = comp[(size_t)G.cod(g)];
    int m_dom = D.mul(idem[(size_t)G.inv(g)], idem[(size_t)h]);
    int m_cod = C.mul(idem[(size_t)g], idem[(size_t)gh]);
    if (monoid_image(theta[(size_t)g], D.ideal_elems(m_dom)) !=
        C.ideal_elems(m_cod))
      fail("G2Violation", "G2: theta_g(B_{g^-1} B_h) != B_g B_{gh} for g = " +
                              G.morphism_id(g) + ", h = " + G.morphism_id(h));

    const auto& Dh = comp[(size_t)G.dom(h)];
    int m3 = Dh.mul(idem[(size_t)G.inv(h)], idem[(size_t)G.inv(gh)]);
    for (int x : Dh.ideal_elems(m3)) {
      int y = theta[(size_t)h][(size_t)x];
      int z1 = y >= 0 ? theta[(size_t)g][(size_t)y] : -1;
      if (z1 < 0 || z1 != theta[(size_t)gh][(size_t)x])
        fail("G3Violation",
             "G3: theta_g(theta_h(x)) != theta_{gh}(x) for g = " +
                 G.morphism_id(g) + ", h = " + G.morphism_id(h) +
                 ", x = " + Dh.elem(x));
    }
  }

  PartialGModule M;
  M.G = std::move(G);
  M.comp = std::move(comp);
  M.idem = std::move(idem);
  M.theta = std::move(theta);
  return M;
}

PartialGModule forget_addition(const PartialRingAction& act) {
  std::vector<FiniteCommMonoid> comp;
  comp.reserve(act.comp.size());
  for (const auto& R : act.comp) comp.push_back(R.mul_monoid());
  return validate_module(act.G, std::move(comp), act.idem, act.theta);
}

Complex::Complex(PartialGModule M) : m_(std::move(M)) {
  tuples_.resize(1);
  slot_of_.resize(1);
  cuts_.resize(1);
  cuts_[0].resize((size_t)m_.G.n_objects());
  for (int o = 0; o < m_.G.n_objects(); ++o)
    cuts_[0][(size_t)o] = m_.comp[(size_t)o].one();
}

void Complex::ensure_degree(int n) const {
  check(n >= 0, "BadArgument", "cochain degree must be >= 0");
  while ((int)tuples_.size() <= n) {
    int d = (int)tuples_.size();
    tuples_.push_back(m_.G.composable_tuples(d));
    slot_of_.emplace_back();
    cuts_.emplace_back();
    const auto& ts = tuples_.back();
    auto& cuts = cuts_.back();
    cuts.resize(ts.size());
    for (size_t s = 0; s < ts.size(); ++s) {
      slot_of_.back().emplace(ts[s], (int)s);
      const auto& B = m_.comp[(size_t)m_.G.cod(ts[s][0])];
      int prefix = ts[s][0];
      int e = m_.idem[(size_t)prefix];
      for (size_t i = 1; i < ts[s].size(); ++i) {
        prefix = m_.G.compose(prefix, ts[s][i]);
        e = B.mul(e, m_.idem[(size_t)prefix]);
      }
      cuts[s] = e;
    }
  }
}

const std::vector<std::vector<int>>& Complex::tuples(int n) const {
  check(n >= 1, "BadArgument", "tuples are indexed from degree 1");
  ensure_degree(n);
  return tuples_[(size_t)n];
}

int Complex::n_slots(int n) const {
  if (n == 0) return m_.G.n_objects();
  return (int)tuples(n).size();
}

int Complex::slot_index(const std::vector<int>& tuple) const {
  check(!tuple.empty(), "BadArgument", "empty tuple");
  ensure_degree((int)tuple.size());
  const auto& m = slot_of_[tuple.size()];
  auto it = m.find(tuple);
  check(it != m.end(), "BadReference", "tuple is not composable");
  return it->second;
}

int Complex::comp_of(int n, int slot) const {
  if (n == 0) return slot;
  return m_.G.cod(tuples(n)[(size_t)slot][0]);
}

int Complex::cut_of(int n, int slot) const {
  ensure_degree(n);
  return cuts_[(size_t)n][(size_t)slot];
}

const FiniteCommMonoid::UnitGroup& Complex::units_at(int n, int slot) const {
  int c = comp_of(n, slot), e = cut_of(n, slot);
  auto key = std::make_pair(c, e);
  auto it = units_.find(key);
  if (it == units_.end())
    it = units_.emplace(key, m_.comp[(size_t)c].unit_group_of(e)).first;
  return it->second;
}

Cochain Complex::identity_cochain(int n) const {
  Cochain out;
  out.n = n;
  out.val.resize((size_t)n_slots(n));
  for (int s = 0; s < n_slots(n); ++s) out.val[(size_t)s] = cut_of(n, s);
  return out;
}

Cochain Complex::mul(const Cochain& a, const Cochain& b) const {
  check(a.n == b.n && a.val.size() == b.val.size(), "DimensionMismatch",
        "cochain degrees differ");
  Cochain out;
  out.n = a.n;
  out.val.resize(a.val.size());
  for (int s = 0; s < (int)a.val.size(); ++s)
    out.val[(size_t)s] = m_.comp[(size_t)comp_of(a.n, s)].mul(
        a.val[(size_t)s], b.val[(size_t)s]);
  return out;
}

Cochain Complex::inverse(const Cochain& a) const {
  Cochain out;
  out.n = a.n;
  out.val.resize(a.val.size());
  for (int s = 0; s < (int)a.val.size(); ++s) {
    const auto& U = units_at(a.n, s);
    out.val[(size_t)s] = U.inv[(size_t)U.position(a.val[(size_t)s])];
  }
  return out;
}

bool Complex::is_valid(const Cochain& a) const {
  if (a.n < 0 || (int)a.val.size() != n_slots(a.n)) return false;
  for (int s = 0; s < (int)a.val.size(); ++s) {
    const auto& U = units_at(a.n, s);
    if (!std::binary_search(U.elems.begin(), U.elems.end(),
                            a.val[(size_t)s]))
      return false;
  }
  return true;
}

Cochain Complex::random_cochain(int n, std::mt19937_64& rng) const {
  Cochain out;
  out.n = n;
  out.val.resize((size_t)n_slots(n));
  for (int s = 0; s < n_slots(n); ++s) {
    const auto& U = units_at(n, s);
    out.val[(size_t)s] = U.elems[(size_t)(rng() % U.elems.size())];
  }
  return out;
}

Cochain Complex::delta(const Cochain& f) const {
  int n = f.n;
  check((int)f.val.size() == n_slots(n), "DimensionMismatch",
        "cochain has the wrong number of values");
  const auto& G = m_.G;
  Cochain out;
  out.n = n + 1;
  out.val.resize((size_t)n_slots(n + 1));

  if (n == 0) {
    for (int g = 0; g < G.n_morphisms(); ++g) {
      const auto& D = m_.comp[(size_t)G.dom(g)];
      const auto& C = m_.comp[(size_t)G.cod(g)];
      int x = D.mul(m_.idem[(size_t)G.inv(g)], f.val[(size_t)G.dom(g)]);
      int acc = m_.theta[(size_t)g][(size_t)x];
      const auto& U = units_at(0, G.cod(g));
      int binv = U.inv[(size_t)U.position(f.val[(size_t)G.cod(g)])];
      acc = C.mul(acc, binv);
      out.val[(size_t)g] = C.mul(acc, cut_of(1, g));
    }
  } else {
    for (int s = 0; s < n_slots(n + 1); ++s) {
      const auto& t = tuples(n + 1)[(size_t)s];
      int g1 = t[0];
      const auto& D = m_.comp[(size_t)G.dom(g1)];
      const auto& C = m_.comp[(size_t)G.cod(g1)];
      int e = cut_of(n + 1, s);

      std::vector<int> sub(t.begin() + 1, t.end());
      int x = D.mul(m_.idem[(size_t)G.inv(g1)],
                    f.val[(size_t)slot_index(sub)]);
      int acc = C.mul(m_.theta[(size_t)g1][(size_t)x], e);

      auto factor = [&](const std::vector<int>& tup, bool invert) {
        int s2 = slot_index(tup);
        int v = f.val[(size_t)s2];
        if (invert) {
          const auto& U = units_at(n, s2);
          v = U.inv[(size_t)U.position(v)];
        }
        acc = C.mul(acc, C.mul(v, e));
      };
      for (int i = 1; i <= n; ++i) {
        std::vector<int> t2;
        t2.reserve((size_t)n);
        for (int j = 0; j < (int)t.size(); ++j) {
          if (j == i - 1)
            t2.push_back(G.compose(t[(size_t)(i - 1)], t[(size_t)i]));
          else if (j != i)
            t2.push_back(t[(size_t)j]);
        }
        factor(t2, i % 2 == 1);
      }
      factor(std::vector<int>(t.begin(), t.end() - 1), n % 2 == 0);
      out.val[(size_t)s] = acc;
    }
  }
  check(is_valid(out), "NonHomomorphicDelta",
        "a coboundary value left its cut unit group");
  return out;
}

u64 Complex::count_cochains(int n, u64 cap) const {
  u64 total = 1;
  for (int s = 0; s < n_slots(n); ++s) {
    total *= (u64)units_at(n, s).elems.size();
    if (total > cap) return 0;
  }
  return total;
}

namespace {

// flattened cyclic coordinates of the cochain group C^d
struct CoordSys {
  int degree = 0;
  std::vector<int> first;   // per slot, offset into the flat list
  std::vector<i64> moduli;  // flat cyclic orders
  int dim() const { return (int)moduli.size(); }
};

CoordSys coord_sys(const Complex& C, int d) {
  CoordSys cs;
  cs.degree = d;
  for (int s = 0; s < C.n_slots(d); ++s) {
    cs.first.push_back(cs.dim());
    for (i64 o : C.units_at(d, s).decomp.orders) cs.moduli.push_back(o);
  }
  return cs;
}

std::vector<i64> dlog(const Complex& C, const CoordSys& cs, const Cochain& f) {
  std::vector<i64> out((size_t)cs.dim(), 0);
  for (int s = 0; s < C.n_slots(cs.degree); ++s) {
    const auto& U = C.units_at(cs.degree, s);
    const auto& lg = U.decomp.log[(size_t)U.position(f.val[(size_t)s])];
    for (size_t i = 0; i < lg.size(); ++i)
      out[(size_t)cs.first[(size_t)s] + i] = lg[i];
  }
  return out;
}

Cochain expc(const Complex& C, const CoordSys& cs, const std::vector<i64>& x) {
  Cochain out;
  out.n = cs.degree;
  out.val.resize((size_t)C.n_slots(cs.degree));
  for (int s = 0; s < C.n_slots(cs.degree); ++s) {
    const auto& U = C.units_at(cs.degree, s);
    std::vector<i64> sub(x.begin() + cs.first[(size_t)s],
                         x.begin() + cs.first[(size_t)s] +
                             (long)U.decomp.orders.size());
    out.val[(size_t)s] = U.elems[(size_t)U.decomp.exp(std::move(sub))];
  }
  return out;
}

// matrix of dlog . delta . exp : Z^dim(src) -> Z^dim(dst), columns = images
// of the coordinate generators
IMat delta_matrix(const Complex& C, const CoordSys& src, const CoordSys& dst) {
  IMat N((size_t)dst.dim(), std::vector<i64>((size_t)src.dim(), 0));
  for (int j = 0; j < src.dim(); ++j) {
    std::vector<i64> e((size_t)src.dim(), 0);
    e[(size_t)j] = 1;
    auto col = dlog(C, dst, C.delta(expc(C, src, e)));
    for (int i = 0; i < dst.dim(); ++i) N[(size_t)i][(size_t)j] = col[(size_t)i];
  }
  return N;
}

IMat diag_of(const std::vector<i64>& d) {
  IMat D(d.size(), std::vector<i64>(d.size(), 0));
  for (size_t i = 0; i < d.size(); ++i) D[i][i] = d[i];
  return D;
}

void hom_crosscheck(const Complex& C, const CoordSys& src, const CoordSys& dst,
                    const IMat& N) {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 3; ++trial) {
    auto f = C.random_cochain(src.degree, rng);
    auto g = C.random_cochain(src.degree, rng);
    check(C.delta(C.mul(f, g)).val == C.mul(C.delta(f), C.delta(g)).val,
          "NonHomomorphicDelta",
          "delta(f g) != delta(f) delta(g) on a random pair");
    auto x = dlog(C, src, f);
    auto lhs = dlog(C, dst, C.delta(f));
    for (int i = 0; i < dst.dim(); ++i) {
      i64 acc = 0;
      for (int j = 0; j < src.dim(); ++j)
        acc += N[(size_t)i][(size_t)j] * x[(size_t)j];
      i64 m = dst.moduli[(size_t)i];
      if (((acc - lhs[(size_t)i]) % m + m) % m != 0)
        fail("NonHomomorphicDelta",
             "the coordinate matrix of delta disagrees with delta");
    }
  }
}

CohomologyGroup cohomology_enumerate(const Complex& C, int n, u64 cap) {
  u64 cn = C.count_cochains(n, cap);
  check(cn != 0, "CapExceeded",
        "enumerating degree-" + std::to_string(n) +
            " cochains exceeds the cap " + std::to_string(cap));
  auto en1 = C.identity_cochain(n + 1);

  // all cocycles of degree n
  std::vector<std::vector<int>> zvals;
  int slots = C.n_slots(n);
  std::vector<size_t> pos((size_t)slots, 0);
  for (u64 it = 0; it < cn; ++it) {
    Cochain f;
    f.n = n;
    f.val.resize((size_t)slots);
    for (int s = 0; s < slots; ++s)
      f.val[(size_t)s] = C.units_at(n, s).elems[pos[(size_t)s]];
    if (C.delta(f).val == en1.val) zvals.push_back(f.val);
    for (int s = 0; s < slots; ++s) {
      if (++pos[(size_t)s] < C.units_at(n, s).elems.size()) break;
      pos[(size_t)s] = 0;
    }
  }

  // all coboundaries from degree n - 1 (none in degree 0)
  std::set<std::vector<int>> bvals;
  if (n >= 1) {
    u64 cp = C.count_cochains(n - 1, cap);
    check(cp != 0, "CapExceeded",
          "enumerating degree-" + std::to_string(n - 1) +
              " cochains exceeds the cap " + std::to_string(cap));
    int ps = C.n_slots(n - 1);
    std::vector<size_t> qos((size_t)ps, 0);
    for (u64 it = 0; it < cp; ++it) {
      Cochain f;
      f.n = n - 1;
      f.val.resize((size_t)ps);
      for (int s = 0; s < ps; ++s)
        f.val[(size_t)s] = C.units_at(n - 1, s).elems[qos[(size_t)s]];
      bvals.insert(C.delta(f).val);
      for (int s = 0; s < ps; ++s) {
        if (++qos[(size_t)s] < C.units_at(n - 1, s).elems.size()) break;
        qos[(size_t)s] = 0;
      }
    }
  }

  auto canon = [&](const std::vector<int>& z) {
    if (n == 0) return z;
    Cochain zc{n, z};
    std::vector<int> best = z;
    for (const auto& b : bvals) {
      auto w = C.mul(zc, Cochain{n, b}).val;
      if (w < best) best = w;
    }
    return best;
  };

  std::map<std::vector<int>, int> cls;
  for (const auto& z : zvals) cls.emplace(canon(z), 0);
  int k = 0;
  for (auto& kv : cls) kv.second = k++;

  std::vector<Cochain> reps;
  reps.reserve(cls.size());
  for (const auto& kv : cls) reps.push_back(Cochain{n, kv.first});

  std::vector<std::vector<int>> table((size_t)k, std::vector<int>((size_t)k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[(size_t)i][(size_t)j] =
          cls.at(canon(C.mul(reps[(size_t)i], reps[(size_t)j]).val));
  int id_class = cls.at(canon(C.identity_cochain(n).val));
  auto dec = abelian_decompose(table, id_class);

  CohomologyGroup H;
  H.degree = n;
  H.order = (u64)k;
  H.factors = elementary_divisors(dec.orders);
  H.reps = std::move(reps);
  H.backend = "enumerate";
  return H;
}

CohomologyGroup cohomology_snf(const Complex& C, int n, u64 cap) {
  auto src = coord_sys(C, n);
  CohomologyGroup H;
  H.degree = n;
  H.backend = "snf";
  if (src.dim() == 0) {
    H.reps = {C.identity_cochain(n)};
    return H;
  }
  auto dst = coord_sys(C, n + 1);
  int m = src.dim();

  // cocycle lattice: x with N x = 0 modulo the target moduli
  IMat Lz;
  if (dst.dim() == 0) {
    Lz = imat_identity((size_t)m);
  } else {
    IMat N = delta_matrix(C, src, dst);
    hom_crosscheck(C, src, dst, N);
    IMat A((size_t)dst.dim(),
           std::vector<i64>((size_t)(m + dst.dim()), 0));
    for (int i = 0; i < dst.dim(); ++i) {
      for (int j = 0; j < m; ++j) A[(size_t)i][(size_t)j] = N[(size_t)i][(size_t)j];
      A[(size_t)i][(size_t)(m + i)] = -dst.moduli[(size_t)i];
    }
    IMat K = integer_kernel(A);
    size_t kc = K.empty() ? 0 : K[0].size();
    IMat G((size_t)m, std::vector<i64>(kc + (size_t)m, 0));
    for (int i = 0; i < m; ++i) {
      for (size_t j = 0; j < kc; ++j) G[(size_t)i][j] = K[(size_t)i][j];
      G[(size_t)i][kc + (size_t)i] = src.moduli[(size_t)i];
    }
    Lz = lattice_column_basis(G);
  }

  // coboundary lattice: columns of the previous delta plus the moduli
  IMat LB;
  {
    IMat Np;
    size_t pc = 0;
    if (n >= 1) {
      auto prev = coord_sys(C, n - 1);
      if (prev.dim() > 0) {
        Np = delta_matrix(C, prev, src);
        pc = (size_t)prev.dim();
      }
    }
    IMat G((size_t)m, std::vector<i64>(pc + (size_t)m, 0));
    for (int i = 0; i < m; ++i) {
      for (size_t j = 0; j < pc; ++j) G[(size_t)i][j] = Np[(size_t)i][j];
      G[(size_t)i][pc + (size_t)i] = src.moduli[(size_t)i];
    }
    LB = lattice_column_basis(G);
  }

  auto Q = lattice_quotient(Lz, LB);
  H.order = (u64)Q.order;
  H.factors = elementary_divisors(Q.orders);
  check(H.order <= cap, "CapExceeded",
        "materializing " + std::to_string(H.order) +
            " representatives exceeds the cap " + std::to_string(cap));

  size_t nf = Q.orders.size();
  std::vector<i64> cnt(nf, 0);
  for (u64 it = 0; it < H.order; ++it) {
    std::vector<i64> x((size_t)m, 0);
    for (size_t f = 0; f < nf; ++f)
      for (int i = 0; i < m; ++i)
        x[(size_t)i] += cnt[f] * Q.gens[(size_t)i][f];
    H.reps.push_back(expc(C, src, x));
    for (size_t f = 0; f < nf; ++f) {
      if (++cnt[f] < Q.orders[f]) break;
      cnt[f] = 0;
    }
  }
  std::sort(H.reps.begin(), H.reps.end(),
            [](const Cochain& a, const Cochain& b) { return a.val < b.val; });
  return H;
}

}  // namespace

CohomologyGroup cohomology(const Complex& C, int n, const std::string& backend,
                           u64 cap) {
  check(n >= 0, "BadArgument", "cohomology degree must be >= 0");
  if (backend == "enumerate") return cohomology_enumerate(C, n, cap);
  if (backend == "snf") return cohomology_snf(C, n, cap);
  check(backend == "auto", "BadArgument",
        "backend must be enumerate, snf or auto");
  bool small = C.count_cochains(n, cap) != 0 &&
               (n == 0 || C.count_cochains(n - 1, cap) != 0);
  return small ? cohomology_enumerate(C, n, cap) : cohomology_snf(C, n, cap);
}

CohomologyGroup cohomology(const PartialGModule& M, int n,
                           const std::string& backend, u64 cap) {
  Complex C(M);
  return cohomology(C, n, backend, cap);
}

bool is_coboundary(const Complex& C, const Cochain& z) {
  check(z.n >= 1, "BadArgument",
        "only positive-degree cochains can be coboundaries");
  check(C.is_valid(z), "BadArgument", "not a valid cochain");
  auto dst = coord_sys(C, z.n);
  if (dst.dim() == 0) return true;
  auto src = coord_sys(C, z.n - 1);
  int m = dst.dim();
  size_t pc = (size_t)src.dim();
  IMat Np;
  if (pc > 0) Np = delta_matrix(C, src, dst);
  IMat A((size_t)m, std::vector<i64>(pc + (size_t)m, 0));
  for (int i = 0; i < m; ++i) {
    for (size_t j = 0; j < pc; ++j) A[(size_t)i][j] = Np[(size_t)i][j];
    A[(size_t)i][pc + (size_t)i] = dst.moduli[(size_t)i];
  }
  return integer_solve(A, dlog(C, dst, z)).has_value();
}

}  // namespace grograde
