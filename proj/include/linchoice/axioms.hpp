#ifndef LINCHOICE_AXIOMS_HPP_
#define LINCHOICE_AXIOMS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "linchoice/structure.hpp"

namespace linchoice {

enum class Axiom {
  kSS0, kSS1, kSS2, kSS3, kSS4, kSS5, kSS6,
  kSS5E, kSS6E,
  kLCR1, kLCR2, kLCR3, kLCR4, kLCR5, kLCR6,
  kLCA1, kLCA2, kLCA3, kLCA4, kLCA5, kLCA6,
};

std::string_view to_string(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);

/// Outcome of one postulate check. On violation `witness` instantiates the
/// quantified sets in the order documented per axiom:
///   SS0, SS1, SS2      [S]
///   SS3, SS4           [S1, S2]
///   SS5                [S0, ..., Sn]  a cycle; Si beats S(i+1), Sn beats S0
///   SS5E               [S0, W01, S1, W12, ..., Sn, Wn0]
///   SS6, SS6E          [S1, S2, S3]
/// LCR reports prefix the SS witness with K.
struct AxiomReport {
  Axiom axiom;
  bool holds = true;
  std::vector<AltSet> witness;

  bool operator==(const AxiomReport&) const = default;
};

enum class Suite {
  kUnionClosed,  // SS0-SS6
  kGeneral,      // SS0-SS4, SS5E, SS6E
};

std::span<const Axiom> suite_axioms(Suite suite);

/// SS0 .. SS6. Sweeps run in canonical domain order and stop at the first
/// violation. SS5 is decided as acyclicity of the beat digraph X -> Y iff
/// X != Y, X | Y in the domain and table(X | Y) == X.
AxiomReport check_ss(const ChoiceFunctionTable& table, Axiom axiom);

/// SS5E and SS6E. SS5E uses the digraph X -> Y iff X != Y and some domain
/// member W contains X | Y with table(W) == X.
AxiomReport check_ss_e(const ChoiceFunctionTable& table, Axiom axiom);

/// Dispatches to check_ss / check_ss_e.
AxiomReport check_axiom(const ChoiceFunctionTable& table, Axiom axiom);

std::vector<AxiomReport> check_suite(const ChoiceFunctionTable& table,
                                     Suite suite);

/// Short-circuiting form of check_suite.
bool satisfies_suite(const ChoiceFunctionTable& table, Suite suite);

bool all_hold(std::span<const AxiomReport> reports);
/// First failing report, if any.
std::optional<AxiomReport> first_violation(
    std::span<const AxiomReport> reports);

/// Re-evaluates the literal postulate body on report.witness. Returns true
/// iff the witness exhibits a violation. Works for SS0-SS6, SS5E and SS6E.
bool replay(const ChoiceFunctionTable& table, const AxiomReport& report);

/// Maps SS1..SS6 to LCR1..LCR6 / LCA1..LCA6 and back.
Axiom as_lcr(Axiom ss);
Axiom as_lca(Axiom ss);
Axiom underlying_ss(Axiom lcr_or_lca);

}  // namespace linchoice

#endif  // LINCHOICE_AXIOMS_HPP_
