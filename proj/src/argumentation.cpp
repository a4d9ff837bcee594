#include "linchoice/argumentation.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "linchoice/error.hpp"

namespace linchoice {

ArgumentationFramework ArgumentationFramework::create(
    std::vector<std::string> arguments,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
  if (arguments.empty()) {
    throw Error(ErrorKind::kInvalidStructure, "framework has no arguments");
  }
  ArgumentationFramework af;
  try {
    af.args_ = Universe(std::move(arguments));
  } catch (const Error& e) {
    throw Error(ErrorKind::kInvalidStructure, e.detail());
  }
  const auto n = af.args_.size();
  af.out_.assign(n, AltSet());
  af.in_.assign(n, AltSet());
  for (const auto& [a, b] : attacks) {
    for (const auto* name : {&a, &b}) {
      if (!af.args_.has(*name)) {
        throw Error(ErrorKind::kUndeclaredArgument,
                    "attack names undeclared argument '" + *name + "'");
      }
    }
    const auto i = af.args_.index_of(a);
    const auto j = af.args_.index_of(b);
    af.attacks_.emplace_back(i, j);
    af.out_[i] = af.out_[i] | AltSet::of({j});
    af.in_[j] = af.in_[j] | AltSet::of({i});
  }
  std::ranges::sort(af.attacks_);
  af.attacks_.erase(std::unique(af.attacks_.begin(), af.attacks_.end()),
                    af.attacks_.end());
  return af;
}

AltSet ArgumentationFramework::attacked_by(AltSet s) const {
  AltSet out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (s.contains(i)) out = out | out_[i];
  }
  return out;
}

AltSet ArgumentationFramework::attackers_of(AltSet s) const {
  AltSet out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (s.contains(i)) out = out | in_[i];
  }
  return out;
}

ArgumentationFramework parse_apx(std::string_view text) {
  static const std::regex kArg(R"(\s*arg\(\s*([^\s,()]+)\s*\)\s*\.\s*)");
  static const std::regex kAtt(
      R"(\s*att\(\s*([^\s,()]+)\s*,\s*([^\s,()]+)\s*\)\s*\.\s*)");
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> attacks;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto pct = line.find('%'); pct != std::string::npos) line.resize(pct);
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    std::smatch m;
    if (std::regex_match(line, m, kArg)) {
      if (std::ranges::find(args, m[1].str()) != args.end()) {
        throw Error(ErrorKind::kSyntaxError,
                    "line " + std::to_string(lineno) + ": argument '" +
                        m[1].str() + "' declared twice");
      }
      args.push_back(m[1].str());
    } else if (std::regex_match(line, m, kAtt)) {
      attacks.emplace_back(m[1].str(), m[2].str());
    } else {
      throw Error(ErrorKind::kSyntaxError,
                  "line " + std::to_string(lineno) + ": expected arg(x). or "
                  "att(x,y).");
    }
  }
  return ArgumentationFramework::create(std::move(args), attacks);
}

std::string to_apx(const ArgumentationFramework& af) {
  std::string out;
  for (const auto& name : af.arguments().names()) out += "arg(" + name + ").\n";
  for (auto [a, b] : af.attacks()) {
    out += "att(" + af.arguments().name(a) + "," + af.arguments().name(b) +
           ").\n";
  }
  return out;
}

std::string_view to_string(ExtensionSemantics s) {
  switch (s) {
    case ExtensionSemantics::kConflictFree: return "conflict_free";
    case ExtensionSemantics::kAdmissible: return "admissible";
    case ExtensionSemantics::kStable: return "stable";
  }
  return "?";
}

std::optional<ExtensionSemantics> parse_extension_semantics(
    std::string_view name) {
  for (auto s : {ExtensionSemantics::kConflictFree,
                 ExtensionSemantics::kAdmissible, ExtensionSemantics::kStable}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool is_conflict_free(const ArgumentationFramework& af, AltSet e) {
  return (af.attacked_by(e) & e).empty();
}

bool is_admissible(const ArgumentationFramework& af, AltSet e) {
  return is_conflict_free(af, e) &&
         af.attackers_of(e).subset_of(af.attacked_by(e));
}

bool is_stable(const ArgumentationFramework& af, AltSet e) {
  const AltSet outside = af.arguments().all().without(e);
  return is_conflict_free(af, e) && outside.subset_of(af.attacked_by(e));
}

std::vector<AltSet> extensions(const ArgumentationFramework& af,
                               ExtensionSemantics sem) {
  if (af.size() > kMaxExtensionArguments) {
    throw Error(ErrorKind::kTooLarge,
                "extension enumeration is limited to " +
                    std::to_string(kMaxExtensionArguments) + " arguments");
  }
  std::vector<AltSet> out;
  const std::uint64_t n = std::uint64_t{1} << af.size();
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    const AltSet e(bits);
    bool ok = false;
    switch (sem) {
      case ExtensionSemantics::kConflictFree: ok = is_conflict_free(af, e); break;
      case ExtensionSemantics::kAdmissible: ok = is_admissible(af, e); break;
      case ExtensionSemantics::kStable: ok = is_stable(af, e); break;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

ChoiceExtensionSemantics ChoiceExtensionSemantics::create(
    const ArgumentationFramework& af, std::vector<AltSet> realizable,
    AltSet fallback, std::optional<std::vector<AltSet>> chain) {
  const auto& u = af.arguments();
  canonicalize(realizable);
  if (realizable.empty()) {
    throw Error(ErrorKind::kInvalidStructure, "no realizable sets");
  }
  for (auto e : realizable) {
    if (!e.subset_of(u.all())) {
      throw Error(ErrorKind::kInvalidStructure,
                  "realizable set uses an undeclared argument");
    }
  }
  if (!canonical_contains(realizable, fallback)) {
    throw Error(ErrorKind::kFallbackNotRealizable,
                "fallback " + u.format(fallback) + " is not realizable");
  }
  std::vector<AltSet> order_chain;
  if (chain) {
    order_chain = std::move(*chain);
    auto sorted = order_chain;
    canonicalize(sorted);
    if (sorted.size() != order_chain.size() || sorted != realizable) {
      throw Error(ErrorKind::kInvalidOrder,
                  "chain is not a permutation of the realizable sets");
    }
  } else {
    order_chain = realizable;
    std::iter_swap(order_chain.begin(),
                   std::ranges::find(order_chain, fallback));
  }
  auto order = LinearSetOrder::from_chain(std::move(order_chain));
  return ChoiceExtensionSemantics(af, std::move(realizable), fallback,
                                  std::move(order));
}

ChoiceExtensionSemantics ChoiceExtensionSemantics::bind(
    const SemanticsConfig& config, const ArgumentationFramework& af) {
  const auto& u = af.arguments();
  std::vector<AltSet> realizable;
  if (const auto* gen = std::get_if<ExtensionSemantics>(&config.realizable)) {
    realizable = extensions(af, *gen);
  } else {
    for (const auto& names :
         std::get<std::vector<std::vector<std::string>>>(config.realizable)) {
      realizable.push_back(u.parse(names));
    }
    auto sorted = realizable;
    canonicalize(sorted);
    if (sorted.size() != realizable.size()) {
      throw Error(ErrorKind::kInvalidStructure,
                  "explicit realizable list repeats a set");
    }
  }
  const AltSet k = u.parse(config.fallback);
  std::optional<std::vector<AltSet>> chain;
  if (config.chain) {
    chain.emplace();
    for (const auto& names : *config.chain) chain->push_back(u.parse(names));
  }
  return create(af, std::move(realizable), k, std::move(chain));
}

AltSet pi_evaluate(const ChoiceExtensionSemantics& sem, AltSet e) {
  const auto& u = sem.framework().arguments();
  if (!e.subset_of(u.all())) {
    throw Error(ErrorKind::kOutOfDomain,
                "query is not a set of arguments of the framework");
  }
  return evaluate(sem.order(), sem.fallback(), e);
}

ChoiceFunctionTable tabulate(const ChoiceExtensionSemantics& sem) {
  const auto& u = sem.framework().arguments();
  if (u.size() > kMaxCertifyArguments) {
    throw Error(ErrorKind::kTooLarge,
                "tabulation is limited to " +
                    std::to_string(kMaxCertifyArguments) + " arguments");
  }
  auto domain = powerset(u.size());
  std::vector<AltSet> values;
  values.reserve(domain.size());
  for (auto e : domain) values.push_back(evaluate(sem.order(), sem.fallback(), e));
  auto st = make_structure(
      u, std::move(domain),
      std::vector<AltSet>(sem.realizable().begin(), sem.realizable().end()));
  return ChoiceFunctionTable::from_function(std::move(st), sem.fallback(),
                                            std::move(values));
}

AxiomReport check_lca(const ChoiceFunctionTable& pi, Axiom lca) {
  auto r = check_ss(pi, underlying_ss(lca));
  r.axiom = lca;
  return r;
}

std::vector<AxiomReport> lca_certify(const ChoiceFunctionTable& pi) {
  std::vector<AxiomReport> out;
  for (auto a : {Axiom::kLCA1, Axiom::kLCA2, Axiom::kLCA3, Axiom::kLCA4,
                 Axiom::kLCA5, Axiom::kLCA6}) {
    out.push_back(check_lca(pi, a));
  }
  return out;
}

std::vector<AxiomReport> lca_certify(const ChoiceExtensionSemantics& sem) {
  return lca_certify(tabulate(sem));
}

ChoiceExtensionSemantics reconstruct(const ArgumentationFramework& af,
                                     const ChoiceFunctionTable& pi) {
  for (const auto& r : lca_certify(pi)) {
    if (!r.holds) throw AxiomViolationError(r);
  }
  auto trace = synthesize(restrict_to_image(pi));
  return ChoiceExtensionSemantics::create(
      af, trace.image, pi.fallback(),
      std::vector<AltSet>(trace.final_order.chain().begin(),
                          trace.final_order.chain().end()));
}

}  // namespace linchoice
