#pragma once
#include "grograde/cohomology.hpp"

namespace grograde {

// The module of central units attached to an epsilon-strongly graded
// algebra: one monoid per object holding all of Z(S_{id_e}), acted on along
// morphisms by the gamma maps, with the epsilon family as the idempotents.
// Monoid elements are keyed by their coordinates over the canonical center
// basis and named as fixed-width digit strings, so element index equals the
// mixed-radix coordinate key.
struct CanonicalModule {
  PartialGModule module;
  std::vector<std::vector<Vec>> basis;  // center basis per object
  std::vector<RowSpace> span;           // the same bases as row spaces
  u32 p = 2;

  Vec vec_of(int obj, int elem) const;
  int elem_of(int obj, const Vec& v) const;  // fails("NotInSpan")
};

CanonicalModule canonical_module(const GradedAlgebra& S,
                                 const EpsilonSystem& E);

// S with the product deformed by a 2-cochain of central units:
// x o y = q(g,h) x y for x in S_g, y in S_h. Construction succeeds exactly
// when q is a 2-cocycle; associativity of the deformed product and the
// coboundary identity are decided independently and must agree. Passing an
// earlier deformation as base composes the two, the central scaling always
// acting through the undeformed product of S.
struct TwistedRing {
  GradedAlgebra graded;
  Cochain q;
};

TwistedRing twist(const GradedAlgebra& S, const EpsilonSystem& E,
                  const CanonicalModule& B, const Cochain& q,
                  const GradedAlgebra* base = nullptr);

// Graded isomorphism search between two deformations of S over families
// c_g of central units acting as x -> c_g x on each component. witness
// holds one monoid element per morphism when found. On instances of total
// dimension <= 6 an independent search through all graded bimodule maps
// cross-checks the verdict.
struct EquivReport {
  bool equivalent = false;
  std::vector<int> witness;
  u64 searched = 0;
};

EquivReport equivalent(const GradedAlgebra& S, const EpsilonSystem& E,
                       const CanonicalModule& B, const TwistedRing& Sa,
                       const TwistedRing& Sb, u64 cap = 1000000);

// Deforms S by every second-cohomology class representative plus a sample
// of further cocycles, partitions the deformations into isomorphism classes
// and checks the partition against the cohomology classes: cohomologous
// cocycles must give equivalent rings, non-cohomologous ones inequivalent,
// and the class count must equal |H^2|. fails("BijectionFailure") with a
// witness pair otherwise.
struct ClassificationReport {
  u64 h2_order = 1;
  std::vector<i64> h2_factors;
  int n_classes = 0;
  std::vector<Cochain> cocycles;  // class representatives first
  std::vector<int> h2_class;      // cohomology class per cocycle
  std::vector<int> cls;           // isomorphism class per cocycle
  std::vector<std::vector<int>> witness;  // scaling family to the class leader
};

ClassificationReport classify(const GradedAlgebra& S, const EpsilonSystem& E,
                              int sample = 50, u64 cap = 1000000,
                              u64 seed = 1);

}  // namespace grograde
