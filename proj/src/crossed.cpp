#include "grograde/crossed.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

namespace grograde {

namespace {

// digits of key in base p, most significant first, each zero-padded to the
// width of p-1, so that the string order of names equals the key order
std::string key_name(u64 key, int k, u32 p) {
  size_t w = std::to_string(p - 1).size();
  std::vector<u32> d((size_t)k);
  for (int i = 0; i < k; ++i) {
    d[(size_t)i] = (u32)(key % p);
    key /= p;
  }
  std::string s;
  for (int i = k - 1; i >= 0; --i) {
    std::string t = std::to_string(d[(size_t)i]);
    s += std::string(w - t.size(), '0') + t;
  }
  return s.empty() ? "0" : s;
}

Vec dense_prod(const StructAlgebra& A, int i, int j) {
  Vec v((size_t)A.dim(), 0);
  for (auto& [k, c] : A.basis_prod(i, j)) v[(size_t)k] = c;
  return v;
}

// All graded linear maps that commute with the left and right actions of
// the identity components under the undeformed product, enumerated and
// filtered for multiplicativity between the two deformed products. Used as
// an independent check of the scalar-family search on small instances.
// Returns nothing when its own search space is too large.
std::optional<bool> graded_iso_exists(const GradedAlgebra& S,
                                      const TwistedRing& Sa,
                                      const TwistedRing& Sb) {
  const auto& G = S.groupoid();
  const auto& A = S.alg();
  const Fp& f = A.field();
  int dim = A.dim();

  struct Block {
    std::vector<int> bas;        // global basis indices of the component
    std::vector<Vec> maps;       // basis of the bimodule map space, m*m flat
  };
  std::vector<Block> blocks;
  size_t total = 0;
  for (int g = 0; g < G.n_morphisms(); ++g) {
    const auto& bas = S.component(g);
    int m = (int)bas.size();
    if (m == 0) continue;
    int ec = G.identity(G.cod(g)), ed = G.identity(G.dom(g));
    std::vector<Vec> rows;
    auto local = [&](const Vec& v) {
      Vec c((size_t)m, 0);
      for (int s = 0; s < m; ++s) c[(size_t)s] = v[(size_t)bas[(size_t)s]];
      return c;
    };
    auto add_rows = [&](int a, bool left) {
      for (int j = 0; j < m; ++j) {
        Vec c1 = local(left ? A.mul(A.unit_vec(a), A.unit_vec(bas[(size_t)j]))
                            : A.mul(A.unit_vec(bas[(size_t)j]), A.unit_vec(a)));
        for (int u = 0; u < m; ++u) {
          Vec r((size_t)m * (size_t)m, 0);
          for (int s = 0; s < m; ++s)
            r[(size_t)u * (size_t)m + (size_t)s] = c1[(size_t)s];
          for (int t = 0; t < m; ++t) {
            Vec c2 = local(left
                               ? A.mul(A.unit_vec(a), A.unit_vec(bas[(size_t)t]))
                               : A.mul(A.unit_vec(bas[(size_t)t]),
                                       A.unit_vec(a)));
            r[(size_t)t * (size_t)m + (size_t)j] = f.sub(
                r[(size_t)t * (size_t)m + (size_t)j], c2[(size_t)u]);
          }
          rows.push_back(std::move(r));
        }
      }
    };
    for (int a : S.component(ec)) add_rows(a, true);
    for (int b : S.component(ed)) add_rows(b, false);
    Block blk;
    blk.bas = bas;
    blk.maps = nullspace(f, std::move(rows), (size_t)m * (size_t)m);
    total += blk.maps.size();
    blocks.push_back(std::move(blk));
  }

  u64 combos = 1;
  for (size_t i = 0; i < total; ++i) {
    combos *= f.p;
    if (combos > 50000) return std::nullopt;
  }

  const auto& Aa = Sa.graded.alg();
  const auto& Ab = Sb.graded.alg();
  std::vector<u32> coef(total, 0);
  for (u64 it = 0; it < combos; ++it) {
    u64 rest = it;
    for (size_t i = 0; i < total; ++i) {
      coef[i] = (u32)(rest % f.p);
      rest /= f.p;
    }
    // assemble the global matrix and check blockwise invertibility
    std::vector<Vec> phi((size_t)dim, Vec((size_t)dim, 0));
    size_t off = 0;
    bool invertible = true;
    for (const auto& blk : blocks) {
      int m = (int)blk.bas.size();
      std::vector<Vec> mg((size_t)m, Vec((size_t)m, 0));
      for (size_t b = 0; b < blk.maps.size(); ++b)
        for (int u = 0; u < m; ++u)
          for (int s = 0; s < m; ++s)
            mg[(size_t)u][(size_t)s] =
                f.add(mg[(size_t)u][(size_t)s],
                      f.mul(coef[off + b],
                            blk.maps[b][(size_t)u * (size_t)m + (size_t)s]));
      off += blk.maps.size();
      RowSpace rs(f, (size_t)m);
      for (const auto& row : mg) rs.insert(row);
      if ((int)rs.dim() != m) {
        invertible = false;
        break;
      }
      for (int u = 0; u < m; ++u)
        for (int s = 0; s < m; ++s)
          phi[(size_t)blk.bas[(size_t)u]][(size_t)blk.bas[(size_t)s]] =
              mg[(size_t)u][(size_t)s];
    }
    if (!invertible) continue;
    auto apply = [&](const Vec& v) {
      Vec out((size_t)dim, 0);
      for (int u = 0; u < dim; ++u)
        for (int k = 0; k < dim; ++k)
          out[(size_t)u] =
              f.add(out[(size_t)u], f.mul(phi[(size_t)u][(size_t)k],
                                          v[(size_t)k]));
      return out;
    };
    bool mult = true;
    for (int i = 0; i < dim && mult; ++i)
      for (int j = 0; j < dim && mult; ++j) {
        if (!G.composable(S.deg(i), S.deg(j))) continue;
        Vec lhs = apply(dense_prod(Aa, i, j));
        Vec rhs = Ab.mul(apply(A.unit_vec(i)), apply(A.unit_vec(j)));
        if (lhs != rhs) mult = false;
      }
    if (mult) return true;
  }
  return false;
}

}  // namespace

Vec CanonicalModule::vec_of(int obj, int elem) const {
  const auto& bs = basis[(size_t)obj];
  Vec v(span[(size_t)obj].width(), 0);
  Fp f{p};
  u64 key = (u64)elem;
  for (const auto& row : bs) {
    f.axpy(v, (u32)(key % p), row);
    key /= p;
  }
  return v;
}

int CanonicalModule::elem_of(int obj, const Vec& v) const {
  Vec c = span[(size_t)obj].coords(v);
  u64 key = 0, mult = 1;
  for (u32 d : c) {
    key += (u64)d * mult;
    mult *= p;
  }
  return (int)key;
}

CanonicalModule canonical_module(const GradedAlgebra& S,
                                 const EpsilonSystem& E) {
  E.require();
  const auto& G = S.groupoid();
  const Fp& f = S.alg().field();
  CanonicalModule B;
  B.p = f.p;

  std::vector<FiniteCommMonoid> comps;
  for (int o = 0; o < G.n_objects(); ++o) {
    auto basis = center_of_object(S, o);
    int k = (int)basis.size();
    u64 n = 1;
    for (int i = 0; i < k; ++i) {
      n *= f.p;
      check(n <= 100000, "CapExceeded",
            "the center at object " + G.object_id(o) + " has " +
                std::to_string(k) + " dimensions, too many to enumerate");
    }
    RowSpace rs(f, (size_t)S.alg().dim());
    for (const auto& row : basis) rs.insert(row);
    B.basis.push_back(std::move(basis));
    B.span.push_back(std::move(rs));

    std::vector<std::string> names((size_t)n);
    for (u64 key = 0; key < n; ++key)
      names[(size_t)key] = key_name(key, k, f.p);
    std::vector<std::vector<int>> op((size_t)n, std::vector<int>((size_t)n));
    for (u64 a = 0; a < n; ++a) {
      Vec va = B.vec_of(o, (int)a);
      for (u64 b = a; b < n; ++b) {
        int r = B.elem_of(o, S.alg().mul(va, B.vec_of(o, (int)b)));
        op[(size_t)a][(size_t)b] = r;
        op[(size_t)b][(size_t)a] = r;
      }
    }
    int one = B.elem_of(o, E.eps[(size_t)G.identity(o)]);
    comps.push_back(FiniteCommMonoid::make(std::move(names), std::move(op),
                                           one));
  }

  std::vector<int> idem((size_t)G.n_morphisms());
  std::vector<std::vector<int>> theta((size_t)G.n_morphisms());
  for (int g = 0; g < G.n_morphisms(); ++g) {
    int c = G.cod(g), d = G.dom(g);
    idem[(size_t)g] = B.elem_of(c, E.eps[(size_t)g]);
    theta[(size_t)g].assign((size_t)comps[(size_t)d].size(), -1);
  }
  for (int g = 0; g < G.n_morphisms(); ++g) {
    int c = G.cod(g), d = G.dom(g);
    for (int x : comps[(size_t)d].ideal_elems(idem[(size_t)G.inv(g)])) {
      Vec z = gamma_apply(S, E, g, B.vec_of(d, x));
      theta[(size_t)g][(size_t)x] = B.elem_of(c, z);
    }
  }
  B.module = validate_module(G, std::move(comps), std::move(idem),
                             std::move(theta));
  return B;
}

TwistedRing twist(const GradedAlgebra& S, const EpsilonSystem& E,
                  const CanonicalModule& B, const Cochain& q,
                  const GradedAlgebra* base) {
  check(q.n == 2, "BadArgument", "deformation needs a 2-cochain");
  Complex C(B.module);
  check(C.is_valid(q), "BadArgument",
        "the factor set is not a valid 2-cochain of central units");
  const auto& G = S.groupoid();
  const auto& A = S.alg();
  const auto& P = base ? base->alg() : A;
  int dim = A.dim();

  const auto& pairs = C.tuples(2);
  std::vector<Vec> w(pairs.size());
  for (size_t s = 0; s < pairs.size(); ++s)
    w[s] = B.vec_of(G.cod(pairs[s][0]), q.val[s]);

  std::vector<ScEntry> sc;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      int g = S.deg(i), h = S.deg(j);
      if (!G.composable(g, h)) continue;
      int s = C.slot_index({g, h});
      Vec prod = A.mul(w[(size_t)s], dense_prod(P, i, j));
      for (int k = 0; k < dim; ++k)
        if (prod[(size_t)k]) sc.push_back({i, j, k, prod[(size_t)k]});
    }

  // on each object the deformed square of 1_e is a central unit whose
  // inverse is the identity's component there
  Vec one((size_t)dim, 0);
  for (int o = 0; o < G.n_objects(); ++o) {
    int e = G.identity(o);
    const Vec& v1 = E.eps[(size_t)e];
    int s = C.slot_index({e, e});
    Vec ce = A.mul(w[(size_t)s], P.mul(v1, v1));
    const auto& U = C.units_at(2, s);
    int ne = U.inv[(size_t)U.position(B.elem_of(o, ce))];
    A.field().axpy(one, 1, B.vec_of(o, ne));
  }

  bool cocycle_ok = C.delta(q).val == C.identity_cochain(3).val;
  bool assoc_ok = true;
  std::optional<StructAlgebra> alg;
  try {
    alg = StructAlgebra::make(A.p(), dim, std::move(sc), std::move(one));
  } catch (const Error& err) {
    std::string kind = err.kind();
    if (kind != "NonAssociative" && kind != "BadIdentity") throw;
    assoc_ok = false;
  }
  check(assoc_ok == cocycle_ok, "CrossCheckFailed",
        "associativity of the deformed product and the cocycle identity "
        "disagree");
  if (!cocycle_ok) {
    auto d = C.delta(q);
    auto e3 = C.identity_cochain(3);
    const auto& trip = C.tuples(3);
    std::string at = "?";
    for (size_t s = 0; s < d.val.size(); ++s)
      if (d.val[s] != e3.val[s]) {
        at = "(" + G.morphism_id(trip[s][0]) + ", " +
             G.morphism_id(trip[s][1]) + ", " + G.morphism_id(trip[s][2]) +
             ")";
        break;
      }
    fail("NotCocycle", "the factor set fails the cocycle identity at " + at);
  }

  std::vector<int> deg((size_t)dim);
  for (int i = 0; i < dim; ++i) deg[(size_t)i] = S.deg(i);
  auto graded = GradedAlgebra::make(std::move(*alg), G, std::move(deg));
  // the deformed epsilons are the original ones scaled by the central
  // components of the deformed identity; for a normalized factor set
  // (q(e,e) the cut identity) they coincide with the original family
  auto E2 = compute_epsilons(graded);
  check(E2.epsilon_strong, "EpsilonMismatch",
        "the deformed ring is not epsilon-strong");
  for (int g = 0; g < G.n_morphisms(); ++g)
    check(E2.eps[(size_t)g] == A.mul(graded.alg().one(), E.eps[(size_t)g]),
          "EpsilonMismatch",
          "the deformed ring does not reproduce the epsilon family at " +
              G.morphism_id(g));
  return {std::move(graded), q};
}

EquivReport equivalent(const GradedAlgebra& S, const EpsilonSystem& E,
                       const CanonicalModule& B, const TwistedRing& Sa,
                       const TwistedRing& Sb, u64 cap) {
  (void)E;
  const auto& G = S.groupoid();
  const auto& A = S.alg();
  Complex C(B.module);
  int nm = G.n_morphisms();

  std::vector<std::vector<Vec>> cand((size_t)nm);
  std::vector<const FiniteCommMonoid::UnitGroup*> U((size_t)nm);
  u64 space = 1;
  for (int g = 0; g < nm; ++g) {
    U[(size_t)g] = &C.units_at(1, g);
    for (int elem : U[(size_t)g]->elems)
      cand[(size_t)g].push_back(B.vec_of(G.cod(g), elem));
    if (space <= cap) space *= (u64)cand[(size_t)g].size();
  }
  check(space <= cap, "SearchSpaceExceeded",
        "the scaling family search space exceeds the cap " +
            std::to_string(cap));

  struct PairC {
    int g, h, gh;
  };
  std::vector<std::vector<PairC>> at((size_t)nm);
  for (auto& t : G.composable_tuples(2)) {
    int g = t[0], h = t[1], gh = G.compose(g, h);
    at[(size_t)std::max({g, h, gh})].push_back({g, h, gh});
  }

  const auto& Aa = Sa.graded.alg();
  const auto& Ab = Sb.graded.alg();
  std::vector<int> pick((size_t)nm, -1);
  auto pair_ok = [&](const PairC& pr) {
    const Vec& cg = cand[(size_t)pr.g][(size_t)pick[(size_t)pr.g]];
    const Vec& ch = cand[(size_t)pr.h][(size_t)pick[(size_t)pr.h]];
    const Vec& cgh = cand[(size_t)pr.gh][(size_t)pick[(size_t)pr.gh]];
    for (int i : S.component(pr.g))
      for (int j : S.component(pr.h)) {
        Vec lhs = A.mul(cgh, dense_prod(Aa, i, j));
        Vec rhs = Ab.mul(A.mul(cg, A.unit_vec(i)), A.mul(ch, A.unit_vec(j)));
        if (lhs != rhs) return false;
      }
    return true;
  };

  EquivReport rep;
  std::function<bool(int)> dfs = [&](int g) -> bool {
    if (g == nm) return true;
    for (size_t pos = 0; pos < cand[(size_t)g].size(); ++pos) {
      pick[(size_t)g] = (int)pos;
      ++rep.searched;
      bool ok = true;
      for (const auto& pr : at[(size_t)g])
        if (!pair_ok(pr)) {
          ok = false;
          break;
        }
      if (ok && dfs(g + 1)) return true;
    }
    pick[(size_t)g] = -1;
    return false;
  };
  if (dfs(0)) {
    rep.equivalent = true;
    rep.witness.resize((size_t)nm);
    for (int g = 0; g < nm; ++g)
      rep.witness[(size_t)g] = U[(size_t)g]->elems[(size_t)pick[(size_t)g]];
  }

  if (A.dim() <= 6) {
    auto brute = graded_iso_exists(S, Sa, Sb);
    if (brute)
      check(*brute == rep.equivalent, "CrossCheckFailed",
            "the scaling family search and the full graded bimodule map "
            "search disagree");
  }
  return rep;
}

ClassificationReport classify(const GradedAlgebra& S, const EpsilonSystem& E,
                              int sample, u64 cap, u64 seed) {
  auto B = canonical_module(S, E);
  Complex C(B.module);
  auto H2 = cohomology(C, 2, "auto", cap);

  ClassificationReport rep;
  rep.h2_order = H2.order;
  rep.h2_factors = H2.factors;
  rep.cocycles = H2.reps;

  std::mt19937_64 rng(seed);
  std::set<std::vector<int>> seen;
  for (const auto& z : rep.cocycles) seen.insert(z.val);
  int want = std::max(sample, 0);
  size_t goal = H2.reps.size() + (size_t)want;
  for (int t = 0; t < 4 * want && rep.cocycles.size() < goal; ++t) {
    auto c = C.random_cochain(1, rng);
    const auto& r = H2.reps[(size_t)(rng() % H2.reps.size())];
    auto z = C.mul(r, C.delta(c));
    if (seen.insert(z.val).second) rep.cocycles.push_back(std::move(z));
  }

  for (const auto& z : rep.cocycles) {
    int cls = -1;
    for (size_t r = 0; r < H2.reps.size(); ++r)
      if (is_coboundary(C, C.mul(z, C.inverse(H2.reps[r])))) {
        check(cls < 0, "BijectionFailure",
              "two cohomology representatives are cohomologous");
        cls = (int)r;
      }
    check(cls >= 0, "BijectionFailure",
          "a cocycle matches no cohomology representative");
    rep.h2_class.push_back(cls);
  }

  std::vector<TwistedRing> tw;
  for (const auto& z : rep.cocycles) tw.push_back(twist(S, E, B, z));

  std::vector<size_t> leader;
  for (size_t i = 0; i < tw.size(); ++i) {
    int cid = -1;
    std::vector<int> wit;
    for (size_t c = 0; c < leader.size(); ++c) {
      auto r = equivalent(S, E, B, tw[i], tw[leader[c]], cap);
      if (r.equivalent) {
        cid = (int)c;
        wit = std::move(r.witness);
        break;
      }
    }
    if (cid < 0) {
      cid = (int)leader.size();
      leader.push_back(i);
    }
    rep.cls.push_back(cid);
    rep.witness.push_back(std::move(wit));
  }
  rep.n_classes = (int)leader.size();

  for (size_t i = 0; i < tw.size(); ++i)
    for (size_t j = i + 1; j < tw.size(); ++j) {
      bool coh = rep.h2_class[i] == rep.h2_class[j];
      bool iso = rep.cls[i] == rep.cls[j];
      if (coh != iso)
        fail("BijectionFailure",
             "cocycles " + std::to_string(i) + " and " + std::to_string(j) +
                 (coh ? " are cohomologous but deform to inequivalent rings"
                      : " are not cohomologous but deform to equivalent "
                        "rings"));
    }
  check(rep.n_classes == (int)rep.h2_order, "BijectionFailure",
        "found " + std::to_string(rep.n_classes) +
            " isomorphism classes against |H^2| = " +
            std::to_string(rep.h2_order));
  return rep;
}

}  // namespace grograde
