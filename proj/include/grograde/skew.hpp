#pragma once
#include <utility>
#include <vector>

#include "grograde/algebra.hpp"
#include "grograde/finring.hpp"
#include "grograde/groupoid.hpp"

namespace grograde {

// Unital partial action of a finite groupoid on a product of finite
// commutative rings, one factor per object. For a morphism g, idem[g] is the
// element index of 1_g inside comp[cod(g)], and theta[g] is a table over the
// elements of comp[dom(g)]: the value at x is theta_g(x), or -1 when x lies
// outside the ideal of 1_{g^-1}.
struct PartialRingAction {
  FiniteGroupoid G;
  std::vector<FiniteCommRing> comp;
  std::vector<int> idem;
  std::vector<std::vector<int>> theta;
};

// Checks that every idem[g] is idempotent, that identity morphisms carry the
// full component with the identity map, that each theta_g is a ring
// isomorphism ideal(1_{g^-1}) -> ideal(1_g) sending 1_{g^-1} to 1_g, and the
// coherence axioms
//   theta_g(B_{g^-1} B_h) = B_g B_{gh}          for composable (g, h)
//   theta_g(theta_h(x))   = theta_{gh}(x)       on B_{h^-1} B_{(gh)^-1}
// where B_g is the ideal of 1_g.
PartialRingAction validate_action(FiniteGroupoid G,
                                  std::vector<FiniteCommRing> comp,
                                  std::vector<int> idem,
                                  std::vector<std::vector<int>> theta);

// true iff every 1_g is the identity of its whole component
bool is_global(const PartialRingAction& act);

// Z_p coordinates for a finite commutative ring whose characteristic is a
// prime p: a basis of the additive group and both directions of the
// coordinate map. fails("BaseFieldMismatch") for non-prime characteristic.
struct ZpEncoding {
  u32 p = 2;
  std::vector<int> basis;     // element indices
  std::vector<Vec> coord;     // per element, length basis.size()
  std::vector<int> elem_at;   // mixed-radix coordinate key -> element
  int elem_of(const Vec& c) const;
};
ZpEncoding zp_encode(const FiniteCommRing& B);

// The partial skew groupoid ring: one basis block B_g delta_g per morphism,
// with (b delta_g)(b' delta_h) = b theta_g(b' 1_{g^-1}) delta_{gh} on
// composable pairs and zero otherwise. All components must share one prime
// characteristic. Construction proves associativity and the grading, and
// checks that the computed epsilon family equals 1_g delta_{c(g)}.
struct SkewRing {
  GradedAlgebra graded;
  // basis index -> (morphism, ring element of comp[cod])
  std::vector<std::pair<int, int>> basis_tag;
  std::vector<Vec> eps_expected;  // per morphism, in algebra coordinates
};
SkewRing build_skew_ring(const PartialRingAction& act);

}  // namespace grograde
