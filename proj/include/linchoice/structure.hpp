#ifndef LINCHOICE_STRUCTURE_HPP_
#define LINCHOICE_STRUCTURE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "linchoice/alternative_set.hpp"
#include "linchoice/relation.hpp"

namespace linchoice {

/// The triple <A, S, E>: alternatives, admissible inputs (the domain) and
/// realizable outputs. Both collections are kept in canonical order;
/// realizable is a non-empty subset of a non-empty domain. Empty member sets
/// are allowed.
class RestrictedChoiceStructure {
 public:
  /// Throws Error(kInvalidStructure) when an invariant fails.
  static RestrictedChoiceStructure create(Universe universe,
                                          std::vector<AltSet> domain,
                                          std::vector<AltSet> realizable);

  const Universe& universe() const { return universe_; }
  std::span<const AltSet> domain() const { return domain_; }
  std::span<const AltSet> realizable() const { return realizable_; }

  std::optional<std::size_t> domain_index(AltSet s) const;
  bool in_domain(AltSet s) const { return domain_index(s).has_value(); }
  bool is_realizable(AltSet s) const;
  /// Some realizable E with E a subset of s.
  bool has_realizable_subset(AltSet s) const;

 private:
  RestrictedChoiceStructure() = default;

  Universe universe_;
  std::vector<AltSet> domain_;
  std::vector<AltSet> realizable_;
  // Dense index of domain members by bit pattern for small universes, -1 for
  // non-members. Empty when the universe is too large.
  std::vector<std::int32_t> dense_index_;
};

using StructurePtr = std::shared_ptr<const RestrictedChoiceStructure>;

StructurePtr make_structure(Universe universe, std::vector<AltSet> domain,
                            std::vector<AltSet> realizable);

/// S1 | S2 in the domain for all S1, S2 in the domain.
bool is_union_closed(const RestrictedChoiceStructure& structure);

/// Extensional function from the domain onto realizable sets, with a
/// designated fallback K. Values are stored aligned with
/// structure().domain().
class ChoiceFunctionTable {
 public:
  /// Full choice-function check: every input that has a realizable subset is
  /// mapped to one of them, every other input to the fallback.
  /// Throws Error(kInvalidTable) or Error(kFallbackNotRealizable).
  static ChoiceFunctionTable create(StructurePtr structure, AltSet fallback,
                                    std::vector<AltSet> values);
  /// Any total function domain -> realizable with K realizable; this is the
  /// object the axiom checkers quantify over.
  static ChoiceFunctionTable from_function(StructurePtr structure,
                                           AltSet fallback,
                                           std::vector<AltSet> values);

  const RestrictedChoiceStructure& structure() const { return *structure_; }
  const StructurePtr& structure_ptr() const { return structure_; }
  AltSet fallback() const { return fallback_; }
  std::span<const AltSet> values() const { return values_; }
  AltSet at(std::size_t domain_index) const { return values_[domain_index]; }
  /// Throws Error(kOutOfDomain) when s is not in the domain.
  AltSet operator()(AltSet s) const;

  /// First domain member breaking the choice-function condition, if any.
  std::optional<AltSet> choice_function_violation() const;
  bool is_choice_function() const {
    return !choice_function_violation().has_value();
  }

  /// Same domain, fallback and values (structures compared by content).
  bool operator==(const ChoiceFunctionTable& other) const;

 private:
  ChoiceFunctionTable(StructurePtr s, AltSet k, std::vector<AltSet> v)
      : structure_(std::move(s)), fallback_(k), values_(std::move(v)) {}

  StructurePtr structure_;
  AltSet fallback_;
  std::vector<AltSet> values_;
};

/// A linear order on a carrier of sets. The chain lists the carrier from
/// least to greatest and fully determines the order.
class LinearSetOrder {
 public:
  /// Throws Error(kInvalidOrder) unless `order` is a linear order.
  explicit LinearSetOrder(Relation order);
  /// Throws Error(kInvalidOrder) on repeated sets.
  static LinearSetOrder from_chain(std::vector<AltSet> chain);

  const Relation& relation() const { return relation_; }
  const Carrier& carrier() const { return relation_.carrier(); }
  std::span<const AltSet> chain() const { return chain_; }
  std::size_t size() const { return chain_.size(); }

  bool operator==(const LinearSetOrder& o) const { return chain_ == o.chain_; }

 private:
  LinearSetOrder(Relation r, std::vector<AltSet> chain)
      : relation_(std::move(r)), chain_(std::move(chain)) {}

  Relation relation_;
  std::vector<AltSet> chain_;
};

/// The least carrier element contained in s, or nullopt when none is.
std::optional<AltSet> min_of_input(const LinearSetOrder& order, AltSet s);

/// min_of_input(order, s) when defined, the fallback otherwise.
AltSet evaluate(const LinearSetOrder& order, AltSet fallback, AltSet s);
/// Same rule over a bare chain (least first); used by tight loops.
AltSet evaluate_chain(std::span<const AltSet> chain, AltSet fallback, AltSet s);

/// min(order) == {k}.
bool is_k_minimal(const LinearSetOrder& order, AltSet k);

/// Every domain member with a carrier subset has a minimum among them.
bool is_smooth(const LinearSetOrder& order,
               const RestrictedChoiceStructure& structure);

/// Tabulates evaluate over the domain. Throws Error(kCarrierNotRealizable) if
/// the carrier is not inside the realizable sets and
/// Error(kFallbackNotRealizable) for an unrealizable fallback.
ChoiceFunctionTable table_from_order(const LinearSetOrder& order,
                                     AltSet fallback,
                                     const StructurePtr& structure);

}  // namespace linchoice

#endif  // LINCHOICE_STRUCTURE_HPP_
