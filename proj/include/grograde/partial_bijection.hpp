#pragma once
#include <string>
#include <utility>
#include <vector>

#include "grograde/error.hpp"
#include "grograde/util.hpp"

namespace grograde {

// A named finite set. Sets are equal when both id and element list agree.
struct FinSet {
  std::string id;
  std::vector<std::string> elems;
  bool operator==(const FinSet&) const = default;
};

// Partial bijection f : src ⇀ dst, defined on dom(f) ⊆ src, injective onto
// img(f) ⊆ dst. The empty map is the zero morphism for its (src, dst) type.
struct PartialBijection {
  FinSet src, dst;
  std::vector<std::pair<std::string, std::string>> map;  // sorted by source
  std::vector<std::string> dom_elems() const;
  std::vector<std::string> img_elems() const;
  bool operator==(const PartialBijection&) const = default;
};

// Validates element membership, injectivity, and sortedness of sets.
PartialBijection make_pb(
    const FinSet& src, const FinSet& dst,
    std::vector<std::pair<std::string, std::string>> map);

PartialBijection zero_pb(const FinSet& src, const FinSet& dst);
bool is_zero_pb(const PartialBijection& f);

// f after g, restricted to where img(g) meets dom(f). A mismatched middle
// set (g.dst != f.src) yields the zero morphism g.src ⇀ f.dst.
PartialBijection compose_pb(const PartialBijection& f,
                            const PartialBijection& g);

// The generalized inverse: swaps src/dst and reverses the graph.
PartialBijection star_pb(const PartialBijection& f);

bool pb_eq(const PartialBijection& a, const PartialBijection& b);

// All partial bijections src ⇀ dst in a fixed deterministic order.
std::vector<PartialBijection> enumerate_pbs(const FinSet& src,
                                            const FinSet& dst);

struct InverseCategoryOptions {
  bool exhaustive_triples = false;  // all triples from the family
  size_t random_triples = 0;        // sampled triples (with mismatches)
  bool uniqueness = false;  // generalized-inverse uniqueness over the family
};

struct InverseCategoryReport {
  bool ok = true;
  size_t triples_checked = 0;
  size_t star_checked = 0;
  size_t uniqueness_pairs = 0;
  std::string counterexample;
};

// Checks associativity of composition, f = f f* f and f* = f* f f*, and
// (optionally) that the generalized inverse is the only g in the family with
// f g f = f and g f g = g.
InverseCategoryReport check_inverse_category(
    const std::vector<PartialBijection>& family,
    const InverseCategoryOptions& opt, Rng& rng);

}  // namespace grograde
