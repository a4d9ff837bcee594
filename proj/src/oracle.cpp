#include "linchoice/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "linchoice/axioms.hpp"
#include "linchoice/error.hpp"

namespace linchoice {

namespace {

struct ValuesHash {
  std::size_t operator()(const std::vector<AltSet>& v) const noexcept {
    std::size_t h = v.size();
    for (auto s : v) h = h * 0x100000001b3ULL ^ AltSetHash{}(s);
    return h;
  }
};

using ValueSet = std::unordered_set<std::vector<AltSet>, ValuesHash>;

// Calls visit on each permutation; stops early when visit returns false.
template <typename Visit>
void permute_chains(const RestrictedChoiceStructure& structure,
                    std::optional<AltSet> k, Visit&& visit) {
  check_oracle_guard(structure);
  std::vector<AltSet> rest;
  std::vector<AltSet> chain;
  if (k) {
    if (!structure.is_realizable(*k)) {
      throw Error(ErrorKind::kFallbackNotRealizable,
                  "fallback " + structure.universe().format(*k) +
                      " is not realizable");
    }
    chain.push_back(*k);
  }
  for (auto e : structure.realizable()) {
    if (!k || e != *k) rest.push_back(e);
  }
  const std::size_t offset = chain.size();
  chain.insert(chain.end(), rest.begin(), rest.end());
  do {
    if (!visit(std::span<const AltSet>(chain))) return;
  } while (std::next_permutation(chain.begin() + offset, chain.end()));
}

std::vector<AltSet> tabulate_chain(const RestrictedChoiceStructure& structure,
                                   std::span<const AltSet> chain, AltSet k) {
  std::vector<AltSet> values;
  values.reserve(structure.domain().size());
  for (auto s : structure.domain()) values.push_back(evaluate_chain(chain, k, s));
  return values;
}

ValueSet representable_values(const RestrictedChoiceStructure& structure,
                               AltSet k) {
  ValueSet out;
  permute_chains(structure, k, [&](std::span<const AltSet> chain) {
    out.insert(tabulate_chain(structure, chain, k));
    return true;
  });
  return out;
}

std::vector<AltSet> fallbacks(const RestrictedChoiceStructure& structure,
                              std::optional<AltSet> k) {
  if (k) return {*k};
  return {structure.realizable().begin(), structure.realizable().end()};
}

}  // namespace

void check_oracle_guard(const RestrictedChoiceStructure& structure) {
  if (structure.realizable().size() > kOracleMaxRealizable) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(structure.realizable().size()) +
                    " realizable sets exceed the oracle limit of " +
                    std::to_string(kOracleMaxRealizable));
  }
  if (structure.domain().size() > kOracleMaxDomain) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(structure.domain().size()) +
                    " domain members exceed the oracle limit of " +
                    std::to_string(kOracleMaxDomain));
  }
}

void for_each_order(const RestrictedChoiceStructure& structure,
                    std::optional<AltSet> k,
                    const std::function<void(std::span<const AltSet>)>& visit) {
  permute_chains(structure, k, [&](std::span<const AltSet> chain) {
    visit(chain);
    return true;
  });
}

std::vector<LinearSetOrder> enumerate_orders(
    const RestrictedChoiceStructure& structure, std::optional<AltSet> k) {
  std::vector<LinearSetOrder> out;
  for_each_order(structure, k, [&](std::span<const AltSet> chain) {
    out.push_back(
        LinearSetOrder::from_chain(std::vector<AltSet>(chain.begin(), chain.end())));
  });
  return out;
}

std::vector<std::vector<AltSet>> feasible_outputs(
    const RestrictedChoiceStructure& structure, AltSet k) {
  std::vector<std::vector<AltSet>> out;
  out.reserve(structure.domain().size());
  for (auto s : structure.domain()) {
    std::vector<AltSet> legal;
    for (auto e : structure.realizable()) {
      if (e.subset_of(s)) legal.push_back(e);
    }
    if (legal.empty()) legal.push_back(k);
    out.push_back(std::move(legal));
  }
  return out;
}

std::uint64_t count_tables(const RestrictedChoiceStructure& structure,
                           AltSet k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (const auto& legal : feasible_outputs(structure, k)) {
    if (n > kMax / legal.size()) return kMax;
    n *= legal.size();
  }
  return n;
}

void for_each_table(const RestrictedChoiceStructure& structure, AltSet k,
                    const std::function<void(std::span<const AltSet>)>& visit) {
  check_oracle_guard(structure);
  if (!structure.is_realizable(k)) {
    throw Error(ErrorKind::kFallbackNotRealizable,
                "fallback " + structure.universe().format(k) +
                    " is not realizable");
  }
  if (auto n = count_tables(structure, k); n > kOracleMaxTables) {
    throw Error(ErrorKind::kTooLarge,
                "table count exceeds the oracle limit of " +
                    std::to_string(kOracleMaxTables));
  }
  auto legal = feasible_outputs(structure, k);
  const std::size_t n = legal.size();
  std::vector<std::size_t> digit(n, 0);
  std::vector<AltSet> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = legal[i][0];
  while (true) {
    visit(values);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digit[i] < legal[i].size()) {
        values[i] = legal[i][digit[i]];
        break;
      }
      digit[i] = 0;
      values[i] = legal[i][0];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<ChoiceFunctionTable> enumerate_tables(const StructurePtr& structure,
                                                  AltSet k) {
  std::vector<ChoiceFunctionTable> out;
  for_each_table(*structure, k, [&](std::span<const AltSet> v) {
    out.push_back(ChoiceFunctionTable::from_function(
        structure, k, std::vector<AltSet>(v.begin(), v.end())));
  });
  return out;
}

OracleVerdict decide_representable(const ChoiceFunctionTable& table) {
  const auto& st = table.structure();
  const AltSet k = table.fallback();
  OracleVerdict verdict{table, false, std::nullopt, false};
  std::vector<AltSet> target(table.values().begin(), table.values().end());
  permute_chains(st, k, [&](std::span<const AltSet> chain) {
    if (tabulate_chain(st, chain, k) != target) return true;
    verdict.representable = true;
    verdict.witness_order = LinearSetOrder::from_chain(
        std::vector<AltSet>(chain.begin(), chain.end()));
    return false;
  });
  verdict.axioms_hold = satisfies_suite(table, Suite::kGeneral);
  return verdict;
}

SweepSummary sweep_serial(const StructurePtr& structure,
                          std::optional<AltSet> k) {
  SweepSummary sum;
  for (auto kk : fallbacks(*structure, k)) {
    const ValueSet rep = representable_values(*structure, kk);
    for_each_table(*structure, kk, [&](std::span<const AltSet> v) {
      std::vector<AltSet> values(v.begin(), v.end());
      const bool r = rep.contains(values);
      auto table =
          ChoiceFunctionTable::from_function(structure, kk, std::move(values));
      const bool a = satisfies_suite(table, Suite::kGeneral);
      ++sum.tables_checked;
      sum.representable += r;
      sum.axioms_hold += a;
      if (r != a) {
        ++sum.violations;
        if (!sum.first_violation) sum.first_violation = std::move(table);
      }
    });
  }
  return sum;
}

SweepSummary sweep_parallel(const StructurePtr& structure,
                            std::optional<AltSet> k) {
  SweepSummary sum;
  for (auto kk : fallbacks(*structure, k)) {
    const ValueSet rep = representable_values(*structure, kk);
    std::vector<std::vector<AltSet>> tables;
    for_each_table(*structure, kk, [&](std::span<const AltSet> v) {
      tables.emplace_back(v.begin(), v.end());
    });
    const auto n = static_cast<std::int64_t>(tables.size());
    std::uint64_t n_rep = 0, n_ax = 0, n_bad = 0;
    std::int64_t first_bad = n;
#pragma omp parallel for schedule(dynamic, 64) \
    reduction(+ : n_rep, n_ax, n_bad) reduction(min : first_bad)
    for (std::int64_t i = 0; i < n; ++i) {
      const bool r = rep.contains(tables[i]);
      auto table = ChoiceFunctionTable::from_function(structure, kk, tables[i]);
      const bool a = satisfies_suite(table, Suite::kGeneral);
      n_rep += r;
      n_ax += a;
      if (r != a) {
        ++n_bad;
        first_bad = std::min(first_bad, i);
      }
    }
    sum.tables_checked += tables.size();
    sum.representable += n_rep;
    sum.axioms_hold += n_ax;
    sum.violations += n_bad;
    if (!sum.first_violation && first_bad < n) {
      sum.first_violation = ChoiceFunctionTable::from_function(
          structure, kk, std::move(tables[first_bad]));
    }
  }
  return sum;
}

bool cross_check_prop4(const StructurePtr& structure) {
  if (!is_union_closed(*structure)) {
    throw Error(ErrorKind::kNotUnionClosed, "domain is not union-closed");
  }
  bool ok = true;
  for (auto kk : fallbacks(*structure, std::nullopt)) {
    for_each_table(*structure, kk, [&](std::span<const AltSet> v) {
      if (!ok) return;
      auto table = ChoiceFunctionTable::from_function(
          structure, kk, std::vector<AltSet>(v.begin(), v.end()));
      const bool plain = check_axiom(table, Axiom::kSS5).holds &&
                         check_axiom(table, Axiom::kSS6).holds;
      const bool ext = check_axiom(table, Axiom::kSS5E).holds &&
                       check_axiom(table, Axiom::kSS6E).holds;
      ok = plain == ext;
    });
    if (!ok) break;
  }
  return ok;
}

}  // namespace linchoice
