#ifndef LINCHOICE_ORACLE_HPP_
#define LINCHOICE_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "linchoice/structure.hpp"

namespace linchoice {

// Brute-force ground truth for tiny structures. Nothing here uses the
// synthesis pipeline; representability is decided by trying every order.

inline constexpr std::size_t kOracleMaxRealizable = 8;
inline constexpr std::size_t kOracleMaxDomain = 20;
inline constexpr std::uint64_t kOracleMaxTables = 4'000'000;

/// Throws Error(kTooLarge) when the structure is outside the guard.
void check_oracle_guard(const RestrictedChoiceStructure& structure);

/// Visits every linear order on the realizable sets as a chain (least
/// first). With k, only chains starting at k. Chains are visited in
/// lexicographic order of their canonical indices.
void for_each_order(const RestrictedChoiceStructure& structure,
                    std::optional<AltSet> k,
                    const std::function<void(std::span<const AltSet>)>& visit);

std::vector<LinearSetOrder> enumerate_orders(
    const RestrictedChoiceStructure& structure, std::optional<AltSet> k);

/// Legal outputs per domain member: the realizable subsets of the input, or
/// {k} when there are none. Aligned with structure.domain().
std::vector<std::vector<AltSet>> feasible_outputs(
    const RestrictedChoiceStructure& structure, AltSet k);

/// Number of valid tables with fallback k (saturates at UINT64_MAX).
std::uint64_t count_tables(const RestrictedChoiceStructure& structure,
                           AltSet k);

/// Visits the value vector of every valid table with fallback k, in
/// odometer order (last domain member varies fastest).
void for_each_table(const RestrictedChoiceStructure& structure, AltSet k,
                    const std::function<void(std::span<const AltSet>)>& visit);

std::vector<ChoiceFunctionTable> enumerate_tables(const StructurePtr& structure,
                                                  AltSet k);

struct OracleVerdict {
  ChoiceFunctionTable table;
  bool representable = false;
  std::optional<LinearSetOrder> witness_order;  // first reproducing order
  bool axioms_hold = false;  // SS0-SS4, SS5E, SS6E
};

/// Tries every k-minimal order on the realizable sets.
OracleVerdict decide_representable(const ChoiceFunctionTable& table);

struct SweepSummary {
  std::uint64_t tables_checked = 0;
  std::uint64_t representable = 0;
  std::uint64_t axioms_hold = 0;
  std::uint64_t violations = 0;  // representable != axioms_hold
  // First disagreement in sweep order, if any.
  std::optional<ChoiceFunctionTable> first_violation;

  bool operator==(const SweepSummary& o) const {
    return tables_checked == o.tables_checked &&
           representable == o.representable && axioms_hold == o.axioms_hold &&
           violations == o.violations;
  }
};

/// Every valid table with fallback k (every realizable k when omitted):
/// representability by exhaustion against the general axiom suite.
/// Reference implementation, single threaded.
SweepSummary sweep_serial(const StructurePtr& structure,
                          std::optional<AltSet> k = std::nullopt);
/// Same result as sweep_serial, tables checked with OpenMP.
SweepSummary sweep_parallel(const StructurePtr& structure,
                            std::optional<AltSet> k = std::nullopt);

/// For every valid table and every fallback: SS5 and SS6 hold iff SS5E and
/// SS6E hold. Throws Error(kNotUnionClosed) or Error(kTooLarge).
bool cross_check_prop4(const StructurePtr& structure);

}  // namespace linchoice

#endif  // LINCHOICE_ORACLE_HPP_
