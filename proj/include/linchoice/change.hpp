#ifndef LINCHOICE_CHANGE_HPP_
#define LINCHOICE_CHANGE_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linchoice/axioms.hpp"
#include "linchoice/structure.hpp"

namespace linchoice {

/// One member of the K-indexed family: the realizable sets for K and the
/// order K is revised with.
struct FamilyEntry {
  AltSet k;
  StructurePtr structure;  // <A, domain, E_K>
  LinearSetOrder order;    // K first
};

/// Input form of a family member; a missing chain means existence_order.
struct FamilySpec {
  AltSet k;
  std::vector<AltSet> realizable;
  std::optional<std::vector<AltSet>> chain;
};

/// Choice-based change operator K * S = C_K(S) over a union-closed domain,
/// with one entry per K in the domain.
class ChangeOperator {
 public:
  /// Throws Error(kNotUnionClosed) for the domain and Error(kFamilyInvalid)
  /// when an entry is missing, repeated, lacks K among its realizable sets,
  /// names sets outside the domain, or has a chain that is not a
  /// permutation of its realizable sets starting at K.
  static ChangeOperator create(Universe universe, std::vector<AltSet> domain,
                               std::vector<FamilySpec> family);

  const Universe& universe() const { return base_->universe(); }
  std::span<const AltSet> domain() const { return base_->domain(); }
  /// <A, domain, domain>; the structure change tables are checked over.
  const StructurePtr& base() const { return base_; }
  /// Entries aligned with domain().
  std::span<const FamilyEntry> entries() const { return entries_; }
  /// Throws Error(kOutOfDomain).
  const FamilyEntry& entry(AltSet k) const;

 private:
  ChangeOperator(StructurePtr base, std::vector<FamilyEntry> entries)
      : base_(std::move(base)), entries_(std::move(entries)) {}

  StructurePtr base_;
  std::vector<FamilyEntry> entries_;
};

/// existence_order for every K. Throws Error(kFamilyInvalid) if some K is
/// not among its realizable sets, Error(kNotUnionClosed) for the domain.
ChangeOperator fit_family(
    Universe universe, std::vector<AltSet> domain,
    std::vector<std::pair<AltSet, std::vector<AltSet>>> realizable_family);

/// K * S. Throws Error(kOutOfDomain) when k or s is not in the domain.
AltSet revise(const ChangeOperator& op, AltSet k, AltSet s);

/// An arbitrary operator domain x domain -> domain, stored extensionally.
class ChangeTable {
 public:
  static ChangeTable tabulate(const ChangeOperator& op);
  /// rows[i][j] = domain[i] * domain[j]. Throws Error(kNotUnionClosed),
  /// Error(kInvalidTable) on shape or values outside the domain.
  static ChangeTable create(Universe universe, std::vector<AltSet> domain,
                            std::vector<std::vector<AltSet>> rows);

  const StructurePtr& base() const { return base_; }
  std::span<const AltSet> domain() const { return base_->domain(); }
  /// Throws Error(kOutOfDomain).
  AltSet operator()(AltSet k, AltSet s) const;
  /// Overwrites one value; Error(kOutOfDomain) / Error(kInvalidTable).
  void set(AltSet k, AltSet s, AltSet value);
  /// S -> K * S as a function over <A, domain, domain> with fallback K.
  ChoiceFunctionTable for_k(AltSet k) const;

  bool operator==(const ChangeTable& o) const { return rows_ == o.rows_; }

 private:
  ChangeTable(StructurePtr base, std::vector<std::vector<AltSet>> rows)
      : base_(std::move(base)), rows_(std::move(rows)) {}

  StructurePtr base_;
  std::vector<std::vector<AltSet>> rows_;
};

/// LCR1..LCR6 by checking the matching SS postulate for every K; the first
/// failing K (canonical order) is reported with the witness prefixed by K.
AxiomReport check_lcr(const ChangeTable& table, Axiom lcr);
std::vector<AxiomReport> lcr_certify(const ChangeTable& table);
std::vector<AxiomReport> lcr_certify(const ChangeOperator& op);

/// True iff the witness of an LCR report exhibits a violation.
bool replay_lcr(const ChangeTable& table, const AxiomReport& report);

/// Rebuilds a linear operator from a table satisfying LCR1-LCR6: E_K is the
/// image of S -> K * S and the order is synthesized. Throws
/// AxiomViolationError with an LCR report when a postulate fails.
ChangeOperator reconstruct(const ChangeTable& table);

}  // namespace linchoice

#endif  // LINCHOICE_CHANGE_HPP_
