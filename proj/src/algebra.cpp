#include "grograde/algebra.hpp"

#include <algorithm>
#include <map>

namespace grograde {

namespace {
using SL = std::vector<std::pair<int, u32>>;  // sparse vector, sorted
}

StructAlgebra StructAlgebra::make(u32 p, int dim, std::vector<ScEntry> sc,
                                  Vec one) {
  check(is_prime(p), "NotPrime", "characteristic must be prime, got " +
                                     std::to_string(p));
  check(dim >= 1, "BadArgument", "dimension must be positive");
  check(one.size() == (size_t)dim, "DimensionMismatch", "identity vector size");
  StructAlgebra A;
  A.f_ = Fp{p};
  A.dim_ = dim;
  A.prod_.assign((size_t)dim * (size_t)dim, {});
  std::map<std::tuple<int, int, int>, u32> acc;
  for (const auto& e : sc) {
    check(e.i >= 0 && e.i < dim && e.j >= 0 && e.j < dim && e.k >= 0 &&
              e.k < dim,
          "BadReference", "structure constant index out of range");
    u32& slot = acc[{e.i, e.j, e.k}];
    slot = A.f_.add(slot, e.v % p);
  }
  for (const auto& [key, v] : acc) {
    if (!v) continue;
    auto [i, j, k] = key;
    A.prod_[(size_t)i * (size_t)dim + (size_t)j].push_back({k, v});
  }
  for (auto& c : one) c %= p;
  A.one_ = std::move(one);

  // identity law, checked on basis vectors
  Vec scratch((size_t)dim, 0);
  auto accum = [&](Vec& out, std::vector<int>& touched, u32 c, const SL& s) {
    for (const auto& e : s) {
      out[(size_t)e.first] = A.f_.add(out[(size_t)e.first],
                                      A.f_.mul(c, e.second));
      touched.push_back(e.first);
    }
  };
  std::vector<int> tch;
  for (int i = 0; i < dim; ++i) {
    tch.clear();
    for (int a = 0; a < dim; ++a)
      if (A.one_[(size_t)a])
        accum(scratch, tch, A.one_[(size_t)a], A.basis_prod(a, i));
    bool ok = true;
    for (int t : tch)
      if (scratch[(size_t)t] != (t == i ? 1u : 0u)) ok = false;
    if (scratch[(size_t)i] != 1u) ok = false;
    for (int t : tch) scratch[(size_t)t] = 0;
    check(ok, "BadIdentity", "claimed identity fails on the left at basis " +
                                 std::to_string(i));
    tch.clear();
    for (int a = 0; a < dim; ++a)
      if (A.one_[(size_t)a])
        accum(scratch, tch, A.one_[(size_t)a], A.basis_prod(i, a));
    ok = true;
    for (int t : tch)
      if (scratch[(size_t)t] != (t == i ? 1u : 0u)) ok = false;
    if (scratch[(size_t)i] != 1u) ok = false;
    for (int t : tch) scratch[(size_t)t] = 0;
    check(ok, "BadIdentity", "claimed identity fails on the right at basis " +
                                 std::to_string(i));
  }

  // associativity on basis triples, fully sparse
  Vec sl((size_t)dim, 0), sr((size_t)dim, 0);
  std::vector<int> tl, tr;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const SL& ij = A.basis_prod(i, j);
      for (int k = 0; k < dim; ++k) {
        tl.clear();
        tr.clear();
        for (const auto& e : ij) accum(sl, tl, e.second, A.basis_prod(e.first, k));
        for (const auto& e : A.basis_prod(j, k))
          accum(sr, tr, e.second, A.basis_prod(i, e.first));
        bool same = true;
        for (int t : tl)
          if (sl[(size_t)t] != sr[(size_t)t]) same = false;
        for (int t : tr)
          if (sl[(size_t)t] != sr[(size_t)t]) same = false;
        for (int t : tl) sl[(size_t)t] = 0;
        for (int t : tr) sr[(size_t)t] = 0;
        check(same, "NonAssociative",
              "associativity fails at basis triple (" + std::to_string(i) +
                  ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    }
  return A;
}

Vec StructAlgebra::unit_vec(int i) const {
  check(i >= 0 && i < dim_, "BadReference", "basis index out of range");
  Vec v((size_t)dim_, 0);
  v[(size_t)i] = 1;
  return v;
}

Vec StructAlgebra::mul(const Vec& x, const Vec& y) const {
  check(x.size() == (size_t)dim_ && y.size() == (size_t)dim_,
        "DimensionMismatch", "vector size");
  Vec out((size_t)dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (!x[(size_t)i]) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!y[(size_t)j]) continue;
      u32 c = f_.mul(x[(size_t)i], y[(size_t)j]);
      for (const auto& e : basis_prod(i, j))
        out[(size_t)e.first] = f_.add(out[(size_t)e.first],
                                      f_.mul(c, e.second));
    }
  }
  return out;
}

GradedAlgebra GradedAlgebra::make(StructAlgebra alg, FiniteGroupoid g,
                                  std::vector<int> deg) {
  GradedAlgebra A;
  A.alg_ = std::move(alg);
  A.g_ = std::move(g);
  A.deg_ = std::move(deg);
  int dim = A.alg_.dim();
  check(A.deg_.size() == (size_t)dim, "DimensionMismatch",
        "degree list size must match dimension");
  A.comp_.assign((size_t)A.g_.n_morphisms(), {});
  for (int i = 0; i < dim; ++i) {
    int d = A.deg_[(size_t)i];
    check(d >= 0 && d < A.g_.n_morphisms(), "BadReference",
          "degree of basis " + std::to_string(i) + " is not a morphism");
    A.comp_[(size_t)d].push_back(i);
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const auto& s = A.alg_.basis_prod(i, j);
      if (s.empty()) continue;
      int c = A.g_.compose(A.deg_[(size_t)i], A.deg_[(size_t)j]);
      if (c < 0)
        fail("GradingViolation",
             "grading: basis " + std::to_string(i) + " and " +
                 std::to_string(j) + " have non-composable degrees but a "
                 "nonzero product");
      for (const auto& e : s)
        check(A.deg_[(size_t)e.first] == c, "GradingViolation",
              "grading: product of basis " + std::to_string(i) + " and " +
                  std::to_string(j) + " leaves its component");
    }
  for (int k = 0; k < dim; ++k)
    if (A.alg_.one()[(size_t)k])
      check(A.g_.is_identity(A.deg_[(size_t)k]), "IdentityNotInR",
            "identity has support outside the object components");
  return A;
}

RowSpace GradedAlgebra::component_product(int g, int h) const {
  RowSpace rs(alg_.field(), (size_t)alg_.dim());
  for (int i : comp_[(size_t)g])
    for (int j : comp_[(size_t)h]) {
      Vec v((size_t)alg_.dim(), 0);
      for (const auto& e : alg_.basis_prod(i, j)) v[(size_t)e.first] = e.second;
      rs.insert(std::move(v));
    }
  return rs;
}

StrongReport is_strongly_graded(const GradedAlgebra& A) {
  StrongReport rep;
  for (const auto& pr : A.groupoid().composable_tuples(2)) {
    int g = pr[0], h = pr[1];
    auto rs = A.component_product(g, h);
    int target = (int)A.component(A.groupoid().compose(g, h)).size();
    if ((int)rs.dim() != target) {
      rep.strong = false;
      rep.witness_g = g;
      rep.witness_h = h;
      rep.dim_product = (int)rs.dim();
      rep.dim_target = target;
      return rep;
    }
  }
  return rep;
}

void EpsilonSystem::require() const {
  check(epsilon_strong, "NotEpsilonStrong", failure);
}

EpsilonSystem compute_epsilons(const GradedAlgebra& A) {
  EpsilonSystem out;
  const auto& G = A.groupoid();
  const auto& f = A.alg().field();
  int dim = A.alg().dim();
  out.eps.assign((size_t)G.n_morphisms(), Vec((size_t)dim, 0));
  for (int g = 0; g < G.n_morphisms(); ++g) {
    auto W = A.component_product(g, G.inv(g));
    size_t m = W.dim();
    if (m == 0) continue;  // eps stays 0
    const auto& U = W.basis();
    std::vector<Vec> rows;
    Vec rhs;
    for (size_t b = 0; b < m; ++b) {
      std::vector<Vec> left(m), right(m);
      for (size_t t = 0; t < m; ++t) {
        left[t] = A.alg().mul(U[t], U[b]);
        right[t] = A.alg().mul(U[b], U[t]);
      }
      for (int a = 0; a < dim; ++a) {
        Vec row(m, 0), row2(m, 0);
        for (size_t t = 0; t < m; ++t) {
          row[t] = left[t][(size_t)a];
          row2[t] = right[t][(size_t)a];
        }
        rows.push_back(std::move(row));
        rhs.push_back(U[b][(size_t)a]);
        rows.push_back(std::move(row2));
        rhs.push_back(U[b][(size_t)a]);
      }
    }
    auto ls = solve_linear(f, rows, rhs);
    if (!ls.ok) {
      out.epsilon_strong = false;
      out.failure_morphism = g;
      out.failure = "the span of S_g S_{g^-1} has no identity element at " +
                    G.morphism_id(g);
      return out;
    }
    Vec e((size_t)dim, 0);
    for (size_t t = 0; t < m; ++t) f.axpy(e, ls.sol[t], U[t]);
    out.eps[(size_t)g] = std::move(e);
  }
  for (int g = 0; g < G.n_morphisms(); ++g) {
    int gi = G.inv(g);
    for (int s : A.component(g)) {
      Vec bs = A.alg().unit_vec(s);
      if (A.alg().mul(out.eps[(size_t)g], bs) != bs ||
          A.alg().mul(bs, out.eps[(size_t)gi]) != bs) {
        out.epsilon_strong = false;
        out.failure_morphism = g;
        out.failure = "eps_g s = s = s eps_{g^-1} fails on S_g at " +
                      G.morphism_id(g);
        return out;
      }
    }
  }
  return out;
}

std::vector<Vec> center_of_object(const GradedAlgebra& A, int obj) {
  const auto& G = A.groupoid();
  const auto& f = A.alg().field();
  int dim = A.alg().dim();
  const auto& C = A.component(G.identity(obj));
  size_t m = C.size();
  std::vector<Vec> rows;
  for (int u : C)
    for (int a = 0; a < dim; ++a) {
      Vec row(m, 0);
      bool nonzero = false;
      for (size_t t = 0; t < m; ++t) {
        u32 v = 0;
        for (const auto& e : A.alg().basis_prod(C[t], u))
          if (e.first == a) v = f.add(v, e.second);
        for (const auto& e : A.alg().basis_prod(u, C[t]))
          if (e.first == a) v = f.sub(v, e.second);
        row[t] = v;
        if (v) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  auto ker = nullspace(f, rows, m);
  std::vector<Vec> out;
  for (const auto& c : ker) {
    Vec v((size_t)dim, 0);
    for (size_t t = 0; t < m; ++t) v[(size_t)C[t]] = c[t];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> cut_center(const GradedAlgebra& A, const Vec& idem, int obj) {
  RowSpace rs(A.alg().field(), (size_t)A.alg().dim());
  for (const auto& z : center_of_object(A, obj))
    rs.insert(A.alg().mul(z, idem));
  return rs.basis();
}

Vec gamma_apply(const GradedAlgebra& A, const EpsilonSystem& E, int g,
                const Vec& b) {
  E.require();
  const auto& G = A.groupoid();
  const auto& f = A.alg().field();
  int dim = A.alg().dim();
  int gi = G.inv(g);
  auto src = cut_center(A, E.eps[(size_t)gi], G.dom(g));
  RowSpace src_span(f, (size_t)dim);
  for (const auto& v : src) src_span.insert(v);
  check(src_span.contains(b), "NotInSpan",
        "gamma input is not in the center cut at the source object");
  auto U = cut_center(A, E.eps[(size_t)g], G.cod(g));
  size_t m = U.size();
  std::vector<Vec> rows;
  Vec rhs;
  for (int s : A.component(g)) {
    Vec bs = A.alg().unit_vec(s);
    std::vector<Vec> lt(m);
    for (size_t t = 0; t < m; ++t) lt[t] = A.alg().mul(U[t], bs);
    Vec target = A.alg().mul(bs, b);
    for (int a = 0; a < dim; ++a) {
      Vec row(m, 0);
      for (size_t t = 0; t < m; ++t) row[t] = lt[t][(size_t)a];
      rows.push_back(std::move(row));
      rhs.push_back(target[(size_t)a]);
    }
  }
  auto ls = solve_linear(f, rows, rhs);
  check(ls.ok, "NoSolution", "gamma has no solution at " + G.morphism_id(g));
  check(ls.nullity == 0 || m == 0, "NotUnique",
        "gamma is not determined at " + G.morphism_id(g));
  Vec out((size_t)dim, 0);
  for (size_t t = 0; t < m; ++t) f.axpy(out, ls.sol[t], U[t]);
  return out;
}

MIsoReport check_m_iso(const GradedAlgebra& A, const EpsilonSystem& E, int g,
                       int h) {
  E.require();
  const auto& G = A.groupoid();
  const auto& f = A.alg().field();
  int dim = A.alg().dim();
  check(G.composable(g, h), "BadComposition",
        "morphisms are not composable: " + G.morphism_id(g) + ", " +
            G.morphism_id(h));
  MIsoReport rep;
  rep.g = g;
  rep.h = h;
  int gh = G.compose(g, h);
  const auto& bg = A.component(g);
  const auto& bh = A.component(h);
  const auto& base = A.component(G.identity(G.dom(g)));
  std::vector<int> locg((size_t)dim, -1), loch((size_t)dim, -1);
  for (size_t i = 0; i < bg.size(); ++i) locg[(size_t)bg[i]] = (int)i;
  for (size_t j = 0; j < bh.size(); ++j) loch[(size_t)bh[j]] = (int)j;
  size_t D = bg.size() * bh.size();
  RowSpace rel(f, D);
  for (size_t i = 0; i < bg.size(); ++i)
    for (int r : base)
      for (size_t j = 0; j < bh.size(); ++j) {
        Vec v(D, 0);
        for (const auto& e : A.alg().basis_prod(bg[i], r)) {
          int loc = locg[(size_t)e.first];
          v[(size_t)loc * bh.size() + j] =
              f.add(v[(size_t)loc * bh.size() + j], e.second);
        }
        for (const auto& e : A.alg().basis_prod(r, bh[j])) {
          int loc = loch[(size_t)e.first];
          v[i * bh.size() + (size_t)loc] =
              f.sub(v[i * bh.size() + (size_t)loc], e.second);
        }
        rel.insert(std::move(v));
      }
  rep.dim_tensor = (int)(D - rel.dim());
  auto image = A.component_product(g, h);
  rep.dim_image = (int)image.dim();
  RowSpace left(f, (size_t)dim), right(f, (size_t)dim);
  for (int k : A.component(gh)) {
    Vec bk = A.alg().unit_vec(k);
    left.insert(A.alg().mul(E.eps[(size_t)g], bk));
    right.insert(A.alg().mul(bk, E.eps[(size_t)G.inv(h)]));
  }
  rep.dim_eps_left = (int)left.dim();
  rep.dim_eps_right = (int)right.dim();
  rep.ok = rep.dim_tensor == rep.dim_image &&
           image.basis() == left.basis() && image.basis() == right.basis();
  if (!rep.ok)
    rep.detail = "tensor, image and cut components disagree at (" +
                 G.morphism_id(g) + ", " + G.morphism_id(h) + ")";
  return rep;
}

}  // namespace grograde
