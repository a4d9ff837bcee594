#ifndef LINCHOICE_SYNTHESIS_HPP_
#define LINCHOICE_SYNTHESIS_HPP_

#include <vector>

#include "linchoice/axioms.hpp"
#include "linchoice/error.hpp"
#include "linchoice/relation.hpp"
#include "linchoice/structure.hpp"

namespace linchoice {

/// Raised by synthesize when a prerequisite postulate fails; carries the
/// failing report with its witness.
class AxiomViolationError : public Error {
 public:
  explicit AxiomViolationError(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Every intermediate stage of the representation pipeline.
struct SynthesisTrace {
  std::vector<AltSet> image;  // carrier of the next three relations
  Relation encoded;           // revealed-preference encoding
  Relation extended;          // total preorder extending `encoded`
  Relation linear;            // linear order on the image
  LinearSetOrder final_order; // linear order on all realizable sets
};

/// {table(S) | S in domain}, canonical order.
std::vector<AltSet> image(const ChoiceFunctionTable& table);

/// Relation on image(table): E1 below E2 iff E1 is the fallback, or some
/// domain member W contains E1 | E2 and table(W) == E1.
Relation encode(const ChoiceFunctionTable& table);

/// Union-closed shortcut: E1 below E2 iff table(E1 | E2) == E1.
/// Throws Error(kNotUnionClosed).
Relation encode_union_closed(const ChoiceFunctionTable& table);

/// Reflexive, antisymmetric, consistent, smooth for the structure, and the
/// unique-minimum-else-fallback rule over `rel` reproduces every table entry.
/// The carrier of `rel` must consist of realizable sets (false otherwise).
bool verify_compatible(const Relation& rel, const ChoiceFunctionTable& table);

/// The unique-minimum-else-fallback rule over an arbitrary relation on sets.
AltSet evaluate_relation(const Relation& rel, AltSet fallback, AltSet s);

/// encode -> suzumura_extension -> linearize -> expand to all realizable
/// sets. The image precedes the rest, which follows in canonical order.
/// Throws AxiomViolationError if SS0-SS4, SS5E or SS6E fails and
/// Error(kInternalIncompatibility) if a stage loses compatibility.
SynthesisTrace synthesize(const ChoiceFunctionTable& table);

/// Canonical order on the realizable sets with k swapped into first place.
/// Throws Error(kFallbackNotRealizable).
LinearSetOrder existence_order(const RestrictedChoiceStructure& structure,
                               AltSet k);

/// The same function over <A, S, image(table)>; this is how the change and
/// argumentation bridges rebuild their realizable sets.
ChoiceFunctionTable restrict_to_image(const ChoiceFunctionTable& table);

}  // namespace linchoice

#endif  // LINCHOICE_SYNTHESIS_HPP_
