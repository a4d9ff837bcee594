#ifndef LINCHOICE_ARGUMENTATION_HPP_
#define LINCHOICE_ARGUMENTATION_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "linchoice/axioms.hpp"
#include "linchoice/structure.hpp"
#include "linchoice/synthesis.hpp"

namespace linchoice {

inline constexpr std::size_t kMaxExtensionArguments = 20;
inline constexpr std::size_t kMaxCertifyArguments = 12;

/// Arguments and attacks. Argument order fixes the bit positions.
class ArgumentationFramework {
 public:
  /// Throws Error(kInvalidStructure) for an empty argument list or repeated
  /// names and Error(kUndeclaredArgument) for attack endpoints.
  static ArgumentationFramework create(
      std::vector<std::string> arguments,
      const std::vector<std::pair<std::string, std::string>>& attacks);

  const Universe& arguments() const { return args_; }
  std::size_t size() const { return args_.size(); }
  /// (attacker, target) index pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& attacks() const {
    return attacks_;
  }
  bool attacks(std::size_t a, std::size_t b) const {
    return out_[a].contains(b);
  }
  /// Arguments attacked by some member of s.
  AltSet attacked_by(AltSet s) const;
  /// Arguments attacking some member of s.
  AltSet attackers_of(AltSet s) const;

 private:
  Universe args_;
  std::vector<std::pair<std::size_t, std::size_t>> attacks_;
  std::vector<AltSet> out_;  // out_[a] = targets of a
  std::vector<AltSet> in_;   // in_[b] = attackers of b
};

/// `arg(x).` and `att(x,y).` facts, one per line; blank lines and `%`
/// comments are skipped. Throws Error(kSyntaxError) naming the line and
/// Error(kUndeclaredArgument).
ArgumentationFramework parse_apx(std::string_view text);
std::string to_apx(const ArgumentationFramework& af);

enum class ExtensionSemantics { kConflictFree, kAdmissible, kStable };

std::string_view to_string(ExtensionSemantics s);
std::optional<ExtensionSemantics> parse_extension_semantics(
    std::string_view name);

bool is_conflict_free(const ArgumentationFramework& af, AltSet e);
bool is_admissible(const ArgumentationFramework& af, AltSet e);
bool is_stable(const ArgumentationFramework& af, AltSet e);

/// All extensions in canonical order. Throws Error(kTooLarge) beyond
/// kMaxExtensionArguments.
std::vector<AltSet> extensions(const ArgumentationFramework& af,
                               ExtensionSemantics sem);

/// Framework-independent description of Pi_F: where the realizable sets come
/// from, the fallback, and an optional chain (default: existence_order).
struct SemanticsConfig {
  std::variant<ExtensionSemantics, std::vector<std::vector<std::string>>>
      realizable;
  std::vector<std::string> fallback;
  std::optional<std::vector<std::vector<std::string>>> chain;
};

/// Pi_F for one framework: E_F, K_F and an order on E_F.
class ChoiceExtensionSemantics {
 public:
  /// Throws Error(kUnknownAlternative) for names outside the framework,
  /// Error(kFallbackNotRealizable) when K_F is not in E_F,
  /// Error(kInvalidOrder) when the chain is not a permutation of E_F and
  /// Error(kInvalidStructure) when E_F is empty.
  static ChoiceExtensionSemantics bind(const SemanticsConfig& config,
                                       const ArgumentationFramework& af);
  /// Direct form over index sets.
  static ChoiceExtensionSemantics create(
      const ArgumentationFramework& af, std::vector<AltSet> realizable,
      AltSet fallback, std::optional<std::vector<AltSet>> chain = std::nullopt);

  const ArgumentationFramework& framework() const { return af_; }
  std::span<const AltSet> realizable() const { return realizable_; }
  AltSet fallback() const { return fallback_; }
  const LinearSetOrder& order() const { return order_; }

 private:
  ChoiceExtensionSemantics(ArgumentationFramework af,
                           std::vector<AltSet> realizable, AltSet k,
                           LinearSetOrder order)
      : af_(std::move(af)),
        realizable_(std::move(realizable)),
        fallback_(k),
        order_(std::move(order)) {}

  ArgumentationFramework af_;
  std::vector<AltSet> realizable_;
  AltSet fallback_;
  LinearSetOrder order_;
};

/// Pi_F(e). Throws Error(kOutOfDomain) unless e is a set of arguments.
AltSet pi_evaluate(const ChoiceExtensionSemantics& sem, AltSet e);

/// Pi_F over every subset of the arguments, as a function on
/// <A, P(A), E_F>. Throws Error(kTooLarge) beyond kMaxCertifyArguments.
ChoiceFunctionTable tabulate(const ChoiceExtensionSemantics& sem);

/// LCA1..LCA6 over the tabulated Pi_F with K_F as fallback.
AxiomReport check_lca(const ChoiceFunctionTable& pi, Axiom lca);
std::vector<AxiomReport> lca_certify(const ChoiceFunctionTable& pi);
std::vector<AxiomReport> lca_certify(const ChoiceExtensionSemantics& sem);

/// Rebuilds Pi_F from its table: E_F is the image and the order is
/// synthesized. Throws AxiomViolationError with an LCA report when a
/// postulate fails.
ChoiceExtensionSemantics reconstruct(const ArgumentationFramework& af,
                                     const ChoiceFunctionTable& pi);

}  // namespace linchoice

#endif  // LINCHOICE_ARGUMENTATION_HPP_
