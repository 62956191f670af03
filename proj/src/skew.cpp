#include "grograde/skew.hpp"

#include <algorithm>
#include <string>

namespace grograde {

namespace {

std::vector<int> image_of_ideal(const std::vector<int>& theta,
                                const std::vector<int>& ideal) {
  std::vector<int> img;
  img.reserve(ideal.size());
  for (int x : ideal) img.push_back(theta[(size_t)x]);
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace

PartialRingAction validate_action(FiniteGroupoid G,
                                  std::vector<FiniteCommRing> comp,
                                  std::vector<int> idem,
                                  std::vector<std::vector<int>> theta) {
  int n = G.n_morphisms();
  check((int)comp.size() == G.n_objects(), "DimensionMismatch",
        "expected one ring component per object");
  check((int)idem.size() == n && (int)theta.size() == n, "DimensionMismatch",
        "expected one idempotent and one theta table per morphism");

  for (int g = 0; g < n; ++g) {
    const auto& C = comp[(size_t)G.cod(g)];
    const auto& D = comp[(size_t)G.dom(g)];
    check(idem[(size_t)g] >= 0 && idem[(size_t)g] < C.size(), "BadReference",
          "idempotent index for " + G.morphism_id(g) + " is out of range");
    check(C.mul(idem[(size_t)g], idem[(size_t)g]) == idem[(size_t)g],
          "NotIdempotent",
          "1_g for g = " + G.morphism_id(g) + " is not idempotent");
    check((int)theta[(size_t)g].size() == D.size(), "DimensionMismatch",
          "theta table for " + G.morphism_id(g) +
              " must cover the whole domain component");
  }

  for (int o = 0; o < G.n_objects(); ++o) {
    int e = G.identity(o);
    check(idem[(size_t)e] == comp[(size_t)o].one(), "G1Violation",
          "G1: the idempotent at the identity morphism " + G.morphism_id(e) +
              " must be the ring identity");
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
      fail("NotRingIso", "theta at " + G.morphism_id(g) +
                             " is not a ring isomorphism between the ideals "
                             "of 1_{g^-1} and 1_g: " +
                             why);
    };
    auto dom_ideal = D.ideal_of(idem[(size_t)G.inv(g)]);
    std::vector<char> in_dom((size_t)D.size(), 0);
    for (int x : dom_ideal) in_dom[(size_t)x] = 1;
    for (int x = 0; x < D.size(); ++x) {
      if ((t[(size_t)x] >= 0) != (bool)in_dom[(size_t)x])
        bad("defined exactly on the ideal of 1_{g^-1} is required, wrong at " +
            D.elem(x));
      if (t[(size_t)x] >= C.size())
        bad("value out of range at " + D.elem(x));
    }
    if (image_of_ideal(t, dom_ideal) != C.ideal_of(idem[(size_t)g]))
      bad("the image is not the ideal of 1_g");
    for (int x : dom_ideal)
      for (int y : dom_ideal) {
        if (t[(size_t)D.add(x, y)] != C.add(t[(size_t)x], t[(size_t)y]))
          bad("not additive at " + D.elem(x) + " + " + D.elem(y));
        if (t[(size_t)D.mul(x, y)] != C.mul(t[(size_t)x], t[(size_t)y]))
          bad("not multiplicative at " + D.elem(x) + " * " + D.elem(y));
      }
    if (t[(size_t)idem[(size_t)G.inv(g)]] != idem[(size_t)g])
      bad("1_{g^-1} must map to 1_g");
  }

  for (const auto& pr : G.composable_tuples(2)) {
    int g = pr[0], h = pr[1], gh = G.compose(g, h);
    const auto& D = comp[(size_t)G.dom(g)];
    const auto& C = comp[(size_t)G.cod(g)];
    int m_dom = D.mul(idem[(size_t)G.inv(g)], idem[(size_t)h]);
    int m_cod = C.mul(idem[(size_t)g], idem[(size_t)gh]);
    if (image_of_ideal(theta[(size_t)g], D.ideal_of(m_dom)) !=
        C.ideal_of(m_cod))
      fail("G2Violation", "G2: theta_g(B_{g^-1} B_h) != B_g B_{gh} for g = " +
                              G.morphism_id(g) + ", h = " + G.morphism_id(h));

    const auto& Dh = comp[(size_t)G.dom(h)];
    int m3 = Dh.mul(idem[(size_t)G.inv(h)], idem[(size_t)G.inv(gh)]);
    for (int x : Dh.ideal_of(m3)) {
      int y = theta[(size_t)h][(size_t)x];
      int z1 = y >= 0 ? theta[(size_t)g][(size_t)y] : -1;
      if (z1 < 0 || z1 != theta[(size_t)gh][(size_t)x])
        fail("G3Violation",
             "G3: theta_g(theta_h(x)) != theta_{gh}(x) for g = " +
                 G.morphism_id(g) + ", h = " + G.morphism_id(h) +
                 ", x = " + Dh.elem(x));
    }
  }

  PartialRingAction act;
  act.G = std::move(G);
  act.comp = std::move(comp);
  act.idem = std::move(idem);
  act.theta = std::move(theta);
  return act;
}

bool is_global(const PartialRingAction& act) {
  for (int g = 0; g < act.G.n_morphisms(); ++g)
    if (act.idem[(size_t)g] != act.comp[(size_t)act.G.cod(g)].one())
      return false;
  return true;
}

int ZpEncoding::elem_of(const Vec& c) const {
  check(c.size() == basis.size(), "DimensionMismatch",
        "coordinate vector has the wrong length");
  size_t key = 0, mult = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    key += (size_t)c[i] * mult;
    mult *= p;
  }
  return elem_at[key];
}

ZpEncoding zp_encode(const FiniteCommRing& B) {
  int c = 1;
  for (int x = B.one(); x != B.zero(); x = B.add(x, B.one())) ++c;
  check(is_prime((u64)c), "BaseFieldMismatch",
        "characteristic " + std::to_string(c) +
            " of the coordinate ring is not prime");
  ZpEncoding enc;
  enc.p = (u32)c;

  // greedy basis of the additive group, which is a Z_p vector space
  std::vector<char> known((size_t)B.size(), 0);
  std::vector<int> reach{B.zero()};
  known[(size_t)B.zero()] = 1;
  for (int e = 0; e < B.size(); ++e) {
    if (known[(size_t)e]) continue;
    enc.basis.push_back(e);
    size_t base = reach.size();
    int shift = B.zero();
    for (u32 k = 1; k < enc.p; ++k) {
      shift = B.add(shift, e);
      for (size_t r = 0; r < base; ++r) {
        int v = B.add(reach[r], shift);
        known[(size_t)v] = 1;
        reach.push_back(v);
      }
    }
  }
  check((int)reach.size() == B.size(), "BaseFieldMismatch",
        "the additive group is not a Z_p vector space");

  size_t k = enc.basis.size(), total = 1;
  for (size_t i = 0; i < k; ++i) total *= enc.p;
  enc.coord.assign((size_t)B.size(), Vec());
  enc.elem_at.assign(total, -1);
  for (size_t key = 0; key < total; ++key) {
    size_t rem = key;
    Vec cs(k, 0);
    int v = B.zero();
    for (size_t i = 0; i < k; ++i) {
      cs[i] = (u32)(rem % enc.p);
      rem /= enc.p;
      for (u32 j = 0; j < cs[i]; ++j) v = B.add(v, enc.basis[i]);
    }
    enc.elem_at[key] = v;
    enc.coord[(size_t)v] = std::move(cs);
  }
  return enc;
}

SkewRing build_skew_ring(const PartialRingAction& act) {
  const auto& G = act.G;
  int n = G.n_morphisms();
  std::vector<ZpEncoding> enc;
  enc.reserve(act.comp.size());
  for (const auto& B : act.comp) enc.push_back(zp_encode(B));
  for (size_t o = 1; o < enc.size(); ++o)
    check(enc[o].p == enc[0].p, "BaseFieldMismatch",
          "components have different characteristics " +
              std::to_string(enc[0].p) + " and " + std::to_string(enc[o].p));
  Fp f{enc[0].p};

  std::vector<RowSpace> block;
  block.reserve((size_t)n);
  std::vector<int> offset((size_t)n + 1, 0);
  for (int g = 0; g < n; ++g) {
    const auto& e = enc[(size_t)G.cod(g)];
    RowSpace rs(f, e.basis.size());
    for (int x : act.comp[(size_t)G.cod(g)].ideal_of(act.idem[(size_t)g]))
      rs.insert(e.coord[(size_t)x]);
    offset[(size_t)g + 1] = offset[(size_t)g] + (int)rs.dim();
    block.push_back(std::move(rs));
  }
  int dim = offset[(size_t)n];

  std::vector<std::pair<int, int>> tag;
  std::vector<int> deg;
  tag.reserve((size_t)dim);
  deg.reserve((size_t)dim);
  for (int g = 0; g < n; ++g)
    for (const auto& row : block[(size_t)g].basis()) {
      tag.emplace_back(g, enc[(size_t)G.cod(g)].elem_of(row));
      deg.push_back(g);
    }

  std::vector<ScEntry> sc;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (!G.composable(g, h)) continue;
      int gh = G.compose(g, h);
      const auto& D = act.comp[(size_t)G.dom(g)];
      const auto& C = act.comp[(size_t)G.cod(g)];
      int one_gi = act.idem[(size_t)G.inv(g)];
      for (int i = offset[(size_t)g]; i < offset[(size_t)g + 1]; ++i)
        for (int j = offset[(size_t)h]; j < offset[(size_t)h + 1]; ++j) {
          int x = D.mul(tag[(size_t)j].second, one_gi);
          int y = act.theta[(size_t)g][(size_t)x];
          int z = C.mul(tag[(size_t)i].second, y);
          if (z == C.zero()) continue;
          Vec cs = block[(size_t)gh].coords(enc[(size_t)G.cod(g)].coord[(size_t)z]);
          for (size_t k = 0; k < cs.size(); ++k)
            if (cs[k]) sc.push_back({i, j, offset[(size_t)gh] + (int)k, cs[k]});
        }
    }

  Vec one((size_t)dim, 0);
  for (int o = 0; o < G.n_objects(); ++o) {
    int e = G.identity(o);
    Vec cs = block[(size_t)e].coords(enc[(size_t)o].coord[(size_t)act.comp[(size_t)o].one()]);
    for (size_t k = 0; k < cs.size(); ++k) one[(size_t)offset[(size_t)e] + k] = cs[k];
  }

  SkewRing S;
  try {
    S.graded = GradedAlgebra::make(
        StructAlgebra::make(f.p, dim, std::move(sc), std::move(one)), G, deg);
  } catch (const Error& e) {
    if (e.kind() == "NonAssociative" || e.kind() == "BadIdentity")
      fail("AssociativityFailure",
           std::string("the skew product is not a unital associative "
                       "algebra: ") +
               e.what());
    throw;
  }
  S.basis_tag = std::move(tag);

  S.eps_expected.assign((size_t)n, Vec((size_t)dim, 0));
  for (int g = 0; g < n; ++g) {
    int e = G.identity(G.cod(g));
    Vec cs = block[(size_t)e].coords(
        enc[(size_t)G.cod(g)].coord[(size_t)act.idem[(size_t)g]]);
    for (size_t k = 0; k < cs.size(); ++k)
      S.eps_expected[(size_t)g][(size_t)offset[(size_t)e] + k] = cs[k];
  }

  auto E = compute_epsilons(S.graded);
  check(E.epsilon_strong, "EpsilonMismatch",
        "the skew product failed the epsilon computation: " + E.failure);
  for (int g = 0; g < n; ++g)
    check(E.eps[(size_t)g] == S.eps_expected[(size_t)g], "EpsilonMismatch",
          "computed epsilon at " + G.morphism_id(g) +
              " differs from 1_g delta_{c(g)}");
  return S;
}

}  // namespace grograde
