#pragma once
#include <map>
#include <random>
#include <string>
#include <vector>

#include "grograde/intlat.hpp"
#include "grograde/skew.hpp"

namespace grograde {

// Partial action of a finite groupoid on a product of finite commutative
// monoids, one factor per object: the multiplicative shadow of a ring
// action. Same data layout as PartialRingAction, same axioms minus
// additivity.
struct PartialGModule {
  FiniteGroupoid G;
  std::vector<FiniteCommMonoid> comp;
  std::vector<int> idem;
  std::vector<std::vector<int>> theta;
};

PartialGModule validate_module(FiniteGroupoid G,
                               std::vector<FiniteCommMonoid> comp,
                               std::vector<int> idem,
                               std::vector<std::vector<int>> theta);

// the multiplicative monoid module underlying a ring action
PartialGModule forget_addition(const PartialRingAction& act);

// n-cochain: one monoid element per composable n-tuple (per object for
// n = 0), each a unit of the cut ideal of 1_{g_1} 1_{g_1 g_2} ...
struct Cochain {
  int n = 0;
  std::vector<int> val;
};

// Tuple lists, cut idempotents and cut unit groups of a module, cached, with
// the cochain group operations and the coboundary map.
class Complex {
public:
  explicit Complex(PartialGModule M);
  const PartialGModule& module() const { return m_; }

  const std::vector<std::vector<int>>& tuples(int n) const;  // n >= 1
  int n_slots(int n) const;
  int slot_index(const std::vector<int>& tuple) const;  // fails("BadReference")
  int comp_of(int n, int slot) const;  // component (object) index
  int cut_of(int n, int slot) const;   // cut idempotent, element index
  const FiniteCommMonoid::UnitGroup& units_at(int n, int slot) const;

  Cochain identity_cochain(int n) const;
  Cochain mul(const Cochain& a, const Cochain& b) const;
  Cochain inverse(const Cochain& a) const;
  bool is_valid(const Cochain& a) const;
  Cochain random_cochain(int n, std::mt19937_64& rng) const;

  // degree-raising coboundary; inverses are taken in each value's home cut
  // unit group and every intermediate is normalized by the target idempotent
  Cochain delta(const Cochain& f) const;

  // number of cochains of degree n, capped (0 means the count exceeds cap)
  u64 count_cochains(int n, u64 cap) const;

private:
  PartialGModule m_;
  mutable std::vector<std::vector<std::vector<int>>> tuples_;
  mutable std::vector<std::map<std::vector<int>, int>> slot_of_;
  mutable std::vector<std::vector<int>> cuts_;  // [degree][slot]
  mutable std::map<std::pair<int, int>, FiniteCommMonoid::UnitGroup> units_;
  void ensure_degree(int n) const;
};

struct CohomologyGroup {
  int degree = 0;
  u64 order = 1;
  std::vector<i64> factors;  // sorted elementary divisors
  std::vector<Cochain> reps;  // one cocycle per class
  std::string backend;
};

// H^n as ker(delta^n) / im(delta^{n-1}) (plain kernel for n = 0), either by
// full enumeration of the cochain groups (within cap) or through integer
// matrices in the cyclic coordinates of the cut unit groups and Smith normal
// form. backend: "enumerate", "snf" or "auto".
CohomologyGroup cohomology(const Complex& C, int n,
                           const std::string& backend = "auto",
                           u64 cap = 1000000);
CohomologyGroup cohomology(const PartialGModule& M, int n,
                           const std::string& backend = "auto",
                           u64 cap = 1000000);

// true iff z = delta(f) for some cochain of degree z.n - 1, decided exactly
// through an integer linear solve in cyclic coordinates
bool is_coboundary(const Complex& C, const Cochain& z);

}  // namespace grograde
