#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grograde/cohomology.hpp"
#include "grograde/crossed.hpp"
#include "grograde/leavitt.hpp"

namespace grograde {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);  // fails("FileError")
void write_file(const std::string& path, const std::string& text);
// wraps the library parser so malformed input surfaces as ParseError
Json parse_json(const std::string& text, const std::string& what);

// Groupoid file: objects, morphisms (id/dom/cod), comp ([g,h,gh] triples),
// inv (pairs), identities (object -> morphism).
RawGroupoid groupoid_from_json(const Json& j);
Json groupoid_to_json(const FiniteGroupoid& G);

// Ring and monoid files: elems, mul, one, plus add and zero for rings.
// Tables are index matrices over the element order given in the file.
FiniteCommRing ring_from_json(const Json& j);
FiniteCommMonoid monoid_from_json(const Json& j);
bool is_ring_json(const Json& j);
Json ring_to_json(const FiniteCommRing& R);
Json monoid_to_json(const FiniteCommMonoid& M);

// Algebra file: p, dim, sc (sparse [i,j,k,v] quadruples), one, and for
// graded use a deg list of morphism ids plus an optional embedded groupoid.
struct AlgebraFile {
  StructAlgebra alg;
  std::vector<std::string> deg;
  std::optional<RawGroupoid> groupoid;
  std::vector<std::string> basis;  // optional display names
};
AlgebraFile algebra_from_json(const Json& j);
Json algebra_to_json(const GradedAlgebra& A, bool embed_groupoid,
                     const std::vector<std::string>& basis_names = {});

// Action and module files: groupoid (inline or path), components keyed by
// object id (inline or path; rings with add, monoids without), idem
// (morphism -> element name), theta (morphism -> {from name: to name}).
// base_dir resolves relative component and groupoid paths.
PartialRingAction action_from_json(const Json& j, const std::string& base_dir);
PartialGModule module_from_json(const Json& j, const std::string& base_dir);
Json action_to_json(const PartialRingAction& act);
Json module_to_json(const PartialGModule& mod);

FinGraph graph_from_json(const Json& j);

// True for error kinds that mean "the input could not be used" (unreadable,
// malformed, out-of-range references, exceeded caps), as opposed to a
// well-formed object failing the property under test.
bool input_error_kind(const std::string& kind);

// Deterministic two-channel report: one JSON rendering, one plain-text
// rendering with identical content. Timing never enters either channel.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  Json verdicts = Json::object();
  Json witnesses = Json::object();

  void add_input(const std::string& path, const std::string& bytes);
  Json to_json() const;
  std::string to_text() const;
};

}  // namespace grograde
