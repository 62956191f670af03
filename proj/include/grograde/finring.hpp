#pragma once
#include <string>
#include <vector>

#include "grograde/error.hpp"
#include "grograde/intlat.hpp"

namespace grograde {

// Finite commutative monoid on a sorted element list, multiplication by
// table. Elements are addressed by index.
class FiniteCommMonoid {
public:
  static FiniteCommMonoid make(std::vector<std::string> elems,
                               std::vector<std::vector<int>> op, int one);
  int size() const { return (int)elems_.size(); }
  const std::string& elem(int i) const { return elems_[i]; }
  int index(const std::string& name) const;
  int mul(int a, int b) const { return op_[a][b]; }
  int one() const { return one_; }
  bool is_idempotent(int x) const { return op_[x][x] == x; }
  std::vector<int> idempotents() const;

  // Principal ideal e*M of an idempotent e: sorted element indices.
  std::vector<int> ideal_elems(int e) const;  // fails("NotIdempotent")

  // Group of invertible elements of the ideal e*M (identity e). inv maps a
  // position in elems to the element index of its inverse. The cyclic
  // decomposition is computed once and carried along.
  struct UnitGroup {
    std::vector<int> elems;  // ascending element indices
    int identity;
    std::vector<int> inv;
    AbelianDecomp decomp;
    int position(int elem_idx) const;  // fails("BadReference") if not a unit
  };
  UnitGroup unit_group_of(int e) const;

private:
  std::vector<std::string> elems_;
  std::vector<std::vector<int>> op_;
  int one_ = 0;
};

// Finite commutative unital ring by tables, elements sorted by name.
class FiniteCommRing {
public:
  static FiniteCommRing make(std::vector<std::string> elems,
                             std::vector<std::vector<int>> add,
                             std::vector<std::vector<int>> mul, int zero,
                             int one);
  int size() const { return (int)elems_.size(); }
  const std::string& elem(int i) const { return elems_[i]; }
  int index(const std::string& name) const;
  int add(int a, int b) const { return add_[a][b]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int neg(int a) const { return neg_[a]; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  FiniteCommMonoid mul_monoid() const;
  std::vector<int> idempotents() const;

  // Principal ideal Ax of an idempotent x. fails("NotIdempotent") otherwise.
  std::vector<int> ideal_of(int x) const;

  // All unital ideals as sorted element sets, by subset enumeration.
  std::vector<std::vector<int>> unital_ideals_by_subsets() const;

  // Additive closure of {i*j : i in I, j in J}.
  std::vector<int> ideal_product(const std::vector<int>& I,
                                 const std::vector<int>& J) const;

private:
  std::vector<std::string> elems_;
  std::vector<std::vector<int>> add_, mul_;
  std::vector<int> neg_;
  int zero_ = 0, one_ = 0;
};

struct IdemIdealReport {
  bool bijective = false;
  bool products_match = false;  // theta(xy) = theta(x)theta(y), and I∩J = IJ
  size_t idempotent_count = 0;
  size_t ideal_count = 0;
  std::string method;  // "subset" when |A| <= cap, else "principal"
  std::string counterexample;
  bool ok() const { return bijective && products_match; }
};

// Verifies that x -> Ax is a bijection from idempotents onto unital ideals
// (monoid isomorphism). Subset enumeration up to the cap, principal-ideal
// checks beyond it.
IdemIdealReport check_idem_ideal_bijection(const FiniteCommRing& R,
                                           size_t subset_cap);

FiniteCommRing zn(int n);
FiniteCommRing ring_product(const FiniteCommRing& a, const FiniteCommRing& b,
                            const std::string& tag_a,
                            const std::string& tag_b);
FiniteCommRing gf4();

}  // namespace grograde
