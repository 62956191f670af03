#include "grograde/finring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace grograde {

namespace {

// apply a permutation: new index of old element i is perm[i]
std::vector<std::vector<int>> permute_table(
    const std::vector<std::vector<int>>& t, const std::vector<int>& perm) {
  size_t n = t.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      out[perm[i]][perm[j]] = perm[(size_t)t[i][j]];
  return out;
}

std::vector<int> sort_perm(std::vector<std::string>& elems) {
  size_t n = elems.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return elems[a] < elems[b]; });
  std::vector<int> perm(n);
  for (size_t pos = 0; pos < n; ++pos) perm[(size_t)order[pos]] = (int)pos;
  std::vector<std::string> sorted(n);
  for (size_t i = 0; i < n; ++i) sorted[(size_t)perm[i]] = elems[i];
  elems = std::move(sorted);
  return perm;
}

void check_table_shape(const std::vector<std::vector<int>>& t, size_t n,
                       const char* what) {
  check(t.size() == n, "BadTable", std::string(what) + " table row count");
  for (const auto& row : t) {
    check(row.size() == n, "BadTable", std::string(what) + " table ragged");
    for (int v : row)
      check(v >= 0 && (size_t)v < n, "BadTable",
            std::string(what) + " table entry out of range");
  }
}

}  // namespace

FiniteCommMonoid FiniteCommMonoid::make(std::vector<std::string> elems,
                                        std::vector<std::vector<int>> op,
                                        int one) {
  size_t n = elems.size();
  check(n > 0, "BadTable", "empty monoid");
  check_table_shape(op, n, "monoid");
  check(one >= 0 && (size_t)one < n, "BadIdentity", "identity out of range");
  std::vector<int> perm = sort_perm(elems);
  check(std::adjacent_find(elems.begin(), elems.end()) == elems.end(),
        "DuplicateId", "duplicate monoid element name");
  op = permute_table(op, perm);
  one = perm[one];
  FiniteCommMonoid M;
  M.elems_ = std::move(elems);
  M.op_ = std::move(op);
  M.one_ = one;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      check(M.op_[i][j] == M.op_[j][i], "NotCommutative",
            "monoid not commutative at (" + M.elems_[i] + ", " + M.elems_[j] +
                ")");
  for (size_t i = 0; i < n; ++i)
    check(M.op_[(size_t)M.one_][i] == (int)i, "BadIdentity",
          "monoid identity law fails at " + M.elems_[i]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        check(M.op_[(size_t)M.op_[i][j]][k] == M.op_[i][(size_t)M.op_[j][k]],
              "NonAssociative", "monoid associativity fails");
  return M;
}

int FiniteCommMonoid::index(const std::string& name) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), name);
  check(it != elems_.end() && *it == name, "BadReference",
        "unknown monoid element: " + name);
  return (int)(it - elems_.begin());
}

std::vector<int> FiniteCommMonoid::idempotents() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_idempotent(i)) out.push_back(i);
  return out;
}

std::vector<int> FiniteCommMonoid::ideal_elems(int e) const {
  check(is_idempotent(e), "NotIdempotent",
        "not an idempotent: " + elems_[e]);
  std::set<int> s;
  for (int x = 0; x < size(); ++x) s.insert(op_[e][x]);
  return std::vector<int>(s.begin(), s.end());
}

int FiniteCommMonoid::UnitGroup::position(int elem_idx) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), elem_idx);
  check(it != elems.end() && *it == elem_idx, "BadReference",
        "element is not a unit of the ideal");
  return (int)(it - elems.begin());
}

FiniteCommMonoid::UnitGroup FiniteCommMonoid::unit_group_of(int e) const {
  std::vector<int> ideal = ideal_elems(e);
  UnitGroup U;
  U.identity = e;
  std::map<int, int> inv_of;
  for (int u : ideal)
    for (int v : ideal)
      if (op_[u][v] == e && !inv_of.count(u)) inv_of[u] = v;
  for (int u : ideal)
    if (inv_of.count(u)) U.elems.push_back(u);
  std::vector<int> pos_of(size(), -1);
  for (size_t i = 0; i < U.elems.size(); ++i) pos_of[(size_t)U.elems[i]] = (int)i;
  for (int u : U.elems) U.inv.push_back(inv_of[u]);
  std::vector<std::vector<int>> table(U.elems.size(),
                                      std::vector<int>(U.elems.size()));
  for (size_t i = 0; i < U.elems.size(); ++i)
    for (size_t j = 0; j < U.elems.size(); ++j) {
      int p = op_[(size_t)U.elems[i]][(size_t)U.elems[j]];
      check(pos_of[(size_t)p] >= 0, "BadTable", "unit product left the group");
      table[i][j] = pos_of[(size_t)p];
    }
  U.decomp = abelian_decompose(table, pos_of[(size_t)e]);
  return U;
}

FiniteCommRing FiniteCommRing::make(std::vector<std::string> elems,
                                    std::vector<std::vector<int>> add,
                                    std::vector<std::vector<int>> mul,
                                    int zero, int one) {
  size_t n = elems.size();
  check(n > 0, "BadTable", "empty ring");
  check_table_shape(add, n, "add");
  check_table_shape(mul, n, "mul");
  check(zero >= 0 && (size_t)zero < n && one >= 0 && (size_t)one < n,
        "BadIdentity", "zero/one out of range");
  std::vector<int> perm = sort_perm(elems);
  check(std::adjacent_find(elems.begin(), elems.end()) == elems.end(),
        "DuplicateId", "duplicate ring element name");
  FiniteCommRing R;
  R.elems_ = std::move(elems);
  R.add_ = permute_table(add, perm);
  R.mul_ = permute_table(mul, perm);
  R.zero_ = perm[zero];
  R.one_ = perm[one];
  // additive structure: commutative, associative, zero, inverses
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      check(R.add_[i][j] == R.add_[j][i], "NotCommutative",
            "addition not commutative");
  for (size_t i = 0; i < n; ++i)
    check(R.add_[(size_t)R.zero_][i] == (int)i, "BadIdentity",
          "zero law fails at " + R.elems_[i]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        check(R.add_[(size_t)R.add_[i][j]][k] == R.add_[i][(size_t)R.add_[j][k]],
              "NonAssociative", "addition not associative");
  R.neg_.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      if (R.add_[i][j] == R.zero_) R.neg_[i] = (int)j;
    check(R.neg_[i] >= 0, "NoAdditiveInverse",
          "no additive inverse for " + R.elems_[i]);
  }
  // multiplicative structure: commutative monoid with identity one
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      check(R.mul_[i][j] == R.mul_[j][i], "NotCommutative",
            "multiplication not commutative at (" + R.elems_[i] + ", " +
                R.elems_[j] + ")");
  for (size_t i = 0; i < n; ++i)
    check(R.mul_[(size_t)R.one_][i] == (int)i, "BadIdentity",
          "one law fails at " + R.elems_[i]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        check(R.mul_[(size_t)R.mul_[i][j]][k] == R.mul_[i][(size_t)R.mul_[j][k]],
              "NonAssociative", "multiplication not associative");
        check(R.mul_[i][(size_t)R.add_[j][k]] ==
                  R.add_[(size_t)R.mul_[i][j]][(size_t)R.mul_[i][k]],
              "NotDistributive", "distributivity fails");
      }
  return R;
}

int FiniteCommRing::index(const std::string& name) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), name);
  check(it != elems_.end() && *it == name, "BadReference",
        "unknown ring element: " + name);
  return (int)(it - elems_.begin());
}

FiniteCommMonoid FiniteCommRing::mul_monoid() const {
  return FiniteCommMonoid::make(elems_, mul_, one_);
}

std::vector<int> FiniteCommRing::idempotents() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (mul_[i][i] == i) out.push_back(i);
  return out;
}

std::vector<int> FiniteCommRing::ideal_of(int x) const {
  check(mul_[x][x] == x, "NotIdempotent", "not an idempotent: " + elems_[x]);
  std::set<int> s;
  for (int r = 0; r < size(); ++r) s.insert(mul_[r][x]);
  return std::vector<int>(s.begin(), s.end());
}

std::vector<std::vector<int>> FiniteCommRing::unital_ideals_by_subsets() const {
  size_t n = elems_.size();
  check(n <= 20, "CapExceeded", "subset enumeration too large");
  std::vector<std::vector<int>> out;
  for (size_t mask = 1; mask < ((size_t)1 << n); ++mask) {
    std::vector<int> I;
    for (size_t i = 0; i < n; ++i)
      if (mask & ((size_t)1 << i)) I.push_back((int)i);
    bool closed = true;
    for (int a : I)
      for (int b : I)
        if (!(mask & ((size_t)1 << add_[a][b]))) closed = false;
    if (!closed) continue;
    for (int a : I)
      for (int r = 0; r < (int)n && closed; ++r)
        if (!(mask & ((size_t)1 << mul_[a][r]))) closed = false;
    if (!closed) continue;
    bool unital = false;
    for (int u : I) {
      bool id = true;
      for (int a : I)
        if (mul_[u][a] != a) id = false;
      if (id) unital = true;
    }
    if (unital) out.push_back(I);
  }
  return out;
}

std::vector<int> FiniteCommRing::ideal_product(const std::vector<int>& I,
                                               const std::vector<int>& J) const {
  std::set<int> gen;
  for (int a : I)
    for (int b : J) gen.insert(mul_[a][b]);
  // additive closure
  std::set<int> closure = gen;
  closure.insert(zero_);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closure.begin(), closure.end());
    for (int a : cur)
      for (int b : cur)
        if (closure.insert(add_[a][b]).second) grew = true;
  }
  return std::vector<int>(closure.begin(), closure.end());
}

IdemIdealReport check_idem_ideal_bijection(const FiniteCommRing& R,
                                           size_t subset_cap) {
  IdemIdealReport rep;
  std::vector<int> E = R.idempotents();
  rep.idempotent_count = E.size();
  std::map<std::vector<int>, int> ideal_to_idem;
  rep.bijective = true;
  for (int x : E) {
    auto I = R.ideal_of(x);
    auto ins = ideal_to_idem.emplace(I, x);
    if (!ins.second) {
      rep.bijective = false;
      rep.counterexample = "ideals of " + R.elem(ins.first->second) + " and " +
                           R.elem(x) + " coincide";
    }
  }
  if ((size_t)R.size() <= subset_cap) {
    rep.method = "subset";
    auto all = R.unital_ideals_by_subsets();
    rep.ideal_count = all.size();
    if (all.size() != E.size()) {
      rep.bijective = false;
      if (rep.counterexample.empty())
        rep.counterexample = "unital ideal count differs from idempotent count";
    } else {
      for (const auto& I : all)
        if (!ideal_to_idem.count(I)) {
          rep.bijective = false;
          rep.counterexample = "a unital ideal is not principal on an idempotent";
        }
    }
  } else {
    rep.method = "principal";
    rep.ideal_count = ideal_to_idem.size();
    // each Ax must be unital with identity x
    for (int x : E) {
      for (int a : R.ideal_of(x))
        if (R.mul(x, a) != a) {
          rep.bijective = false;
          rep.counterexample = "idempotent " + R.elem(x) +
                               " is not an identity of its ideal";
        }
    }
  }
  rep.products_match = true;
  for (int x : E)
    for (int y : E) {
      auto Ix = R.ideal_of(x), Iy = R.ideal_of(y);
      auto prod = R.ideal_product(Ix, Iy);
      auto Ixy = R.ideal_of(R.mul(x, y));
      std::vector<int> inter;
      std::set_intersection(Ix.begin(), Ix.end(), Iy.begin(), Iy.end(),
                            std::back_inserter(inter));
      if (prod != Ixy || prod != inter) {
        rep.products_match = false;
        rep.counterexample = "ideal product mismatch at (" + R.elem(x) + ", " +
                             R.elem(y) + ")";
      }
    }
  return rep;
}

FiniteCommRing zn(int n) {
  check(n >= 1, "BadArgument", "modulus must be positive");
  size_t width = std::to_string(n - 1).size();
  auto name = [&](int k) {
    std::string s = std::to_string(k);
    return std::string(width - s.size(), '0') + s;
  };
  std::vector<std::string> elems;
  std::vector<std::vector<int>> add(n, std::vector<int>(n)),
      mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) elems.push_back(name(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[i][j] = (i + j) % n;
      mul[i][j] = (i * j) % n;
    }
  return FiniteCommRing::make(elems, add, mul, 0, 1 % n);
}

FiniteCommRing ring_product(const FiniteCommRing& a, const FiniteCommRing& b,
                            const std::string& tag_a,
                            const std::string& tag_b) {
  int na = a.size(), nb = b.size();
  auto name = [&](int i, int j) {
    return tag_a + a.elem(i) + "|" + tag_b + b.elem(j);
  };
  std::vector<std::string> elems;
  int n = na * nb;
  std::vector<std::vector<int>> add(n, std::vector<int>(n)),
      mul(n, std::vector<int>(n));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) elems.push_back(name(i, j));
  auto idx = [&](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) {
          add[idx(i, j)][idx(k, l)] = idx(a.add(i, k), b.add(j, l));
          mul[idx(i, j)][idx(k, l)] = idx(a.mul(i, k), b.mul(j, l));
        }
  return FiniteCommRing::make(elems, add, mul, idx(a.zero(), b.zero()),
                              idx(a.one(), b.one()));
}

FiniteCommRing gf4() {
  // F_4 = F_2[x]/(x^2+x+1), y = x+1
  std::vector<std::string> e = {"0", "1", "x", "y"};
  auto pack = [](std::initializer_list<int> v) {
    return std::vector<int>(v);
  };
  std::vector<std::vector<int>> add = {
      pack({0, 1, 2, 3}), pack({1, 0, 3, 2}), pack({2, 3, 0, 1}),
      pack({3, 2, 1, 0})};
  std::vector<std::vector<int>> mul = {
      pack({0, 0, 0, 0}), pack({0, 1, 2, 3}), pack({0, 2, 3, 1}),
      pack({0, 3, 1, 2})};
  return FiniteCommRing::make(e, add, mul, 0, 1);
}

}  // namespace grograde
