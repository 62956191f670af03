#pragma once
#include <string>
#include <utility>
#include <vector>

#include "grograde/fp.hpp"
#include "grograde/groupoid.hpp"

namespace grograde {

// one structure constant: b_i * b_j has coefficient v at b_k
struct ScEntry {
  int i, j, k;
  u32 v;
};

// Finite-dimensional associative unital algebra over Z_p, described by
// structure constants on a fixed basis b_0 .. b_{dim-1}.
class StructAlgebra {
public:
  static StructAlgebra make(u32 p, int dim, std::vector<ScEntry> sc, Vec one);

  u32 p() const { return f_.p; }
  const Fp& field() const { return f_; }
  int dim() const { return dim_; }
  const Vec& one() const { return one_; }
  Vec unit_vec(int i) const;

  // sparse product of two basis vectors, sorted by coordinate
  const std::vector<std::pair<int, u32>>& basis_prod(int i, int j) const {
    return prod_[(size_t)i * (size_t)dim_ + (size_t)j];
  }
  Vec mul(const Vec& x, const Vec& y) const;

private:
  Fp f_;
  int dim_ = 0;
  std::vector<std::vector<std::pair<int, u32>>> prod_;
  Vec one_;
};

// Algebra together with a groupoid grading: every basis vector is
// homogeneous, deg maps basis index to morphism index. make() checks that
// products respect composition and vanish on non-composable degrees.
class GradedAlgebra {
public:
  static GradedAlgebra make(StructAlgebra alg, FiniteGroupoid g,
                            std::vector<int> deg);

  const StructAlgebra& alg() const { return alg_; }
  const FiniteGroupoid& groupoid() const { return g_; }
  int deg(int basis) const { return deg_[(size_t)basis]; }
  const std::vector<int>& component(int morphism) const {
    return comp_[(size_t)morphism];
  }
  // span of S_g * S_h inside the whole algebra
  RowSpace component_product(int g, int h) const;

private:
  StructAlgebra alg_;
  FiniteGroupoid g_;
  std::vector<int> deg_;
  std::vector<std::vector<int>> comp_;  // basis indices per morphism
};

struct StrongReport {
  bool strong = true;
  int witness_g = -1, witness_h = -1;  // composable pair with a defect
  int dim_product = 0, dim_target = 0;
};
StrongReport is_strongly_graded(const GradedAlgebra& A);

// The family eps[g] = identity element of span(S_g S_{g^-1}), when every
// such span has one and eps_g s = s = s eps_{g^-1} holds on each S_g.
struct EpsilonSystem {
  bool epsilon_strong = true;
  std::vector<Vec> eps;  // per morphism index, valid when epsilon_strong
  int failure_morphism = -1;
  std::string failure;
  void require() const;  // fails("NotEpsilonStrong") unless epsilon_strong
};
EpsilonSystem compute_epsilons(const GradedAlgebra& A);

// canonical basis of the center of the object component S_{id_obj}
std::vector<Vec> center_of_object(const GradedAlgebra& A, int obj);
// canonical basis of Z(S_{id_obj}) * idem
std::vector<Vec> cut_center(const GradedAlgebra& A, const Vec& idem, int obj);

// The unique z in Z(S_{id_c(g)}) eps_g with z s = s b for all s in S_g,
// for b in Z(S_{id_d(g)}) eps_{g^-1}.
Vec gamma_apply(const GradedAlgebra& A, const EpsilonSystem& E, int g,
                const Vec& b);

// Checks S_g (x)_{S_e} S_h = eps_g S_{gh} = S_{gh} eps_{h^-1} through the
// multiplication map, comparing ranks and spans.
struct MIsoReport {
  bool ok = true;
  int g = -1, h = -1;
  int dim_tensor = 0, dim_image = 0;
  int dim_eps_left = 0, dim_eps_right = 0;
  std::string detail;
};
MIsoReport check_m_iso(const GradedAlgebra& A, const EpsilonSystem& E, int g,
                       int h);

}  // namespace grograde
