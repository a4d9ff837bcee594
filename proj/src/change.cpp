#include "linchoice/change.hpp"

#include <algorithm>
#include <string>

#include "linchoice/error.hpp"
#include "linchoice/synthesis.hpp"

namespace linchoice {

namespace {

constexpr Axiom kLcr[] = {Axiom::kLCR1, Axiom::kLCR2, Axiom::kLCR3,
                          Axiom::kLCR4, Axiom::kLCR5, Axiom::kLCR6};

StructurePtr make_base(Universe universe, std::vector<AltSet> domain) {
  auto realizable = domain;
  auto base = make_structure(std::move(universe), std::move(domain),
                             std::move(realizable));
  if (!is_union_closed(*base)) {
    throw Error(ErrorKind::kNotUnionClosed,
                "change operators need a union-closed domain");
  }
  return base;
}

std::size_t index_in(const StructurePtr& base, AltSet s) {
  auto i = base->domain_index(s);
  if (!i) {
    throw Error(ErrorKind::kOutOfDomain,
                base->universe().format(s) + " is not in the domain");
  }
  return *i;
}

}  // namespace

ChangeOperator ChangeOperator::create(Universe universe,
                                      std::vector<AltSet> domain,
                                      std::vector<FamilySpec> family) {
  auto base = make_base(universe, std::move(domain));
  const auto& u = base->universe();
  auto invalid = [](const std::string& what) {
    return Error(ErrorKind::kFamilyInvalid, what);
  };

  std::vector<const FamilySpec*> by_k(base->domain().size(), nullptr);
  for (const auto& spec : family) {
    auto i = base->domain_index(spec.k);
    if (!i) throw invalid("family names K = " + u.format(spec.k) +
                          " outside the domain");
    if (by_k[*i]) throw invalid("family lists K = " + u.format(spec.k) +
                                " twice");
    by_k[*i] = &spec;
  }

  std::vector<FamilyEntry> entries;
  entries.reserve(by_k.size());
  for (std::size_t i = 0; i < by_k.size(); ++i) {
    const AltSet k = base->domain()[i];
    if (!by_k[i]) throw invalid("no family entry for K = " + u.format(k));
    const auto& spec = *by_k[i];
    StructurePtr st;
    try {
      st = make_structure(
          u, std::vector<AltSet>(base->domain().begin(), base->domain().end()),
          spec.realizable);
    } catch (const Error& e) {
      throw invalid("realizable sets for K = " + u.format(k) + ": " +
                    e.detail());
    }
    if (!st->is_realizable(k)) {
      throw invalid("K = " + u.format(k) + " is not among its realizable sets");
    }
    if (!spec.chain) {
      entries.push_back({k, st, existence_order(*st, k)});
      continue;
    }
    auto chain = *spec.chain;
    auto sorted = chain;
    canonicalize(sorted);
    if (sorted.size() != chain.size() ||
        !std::ranges::equal(sorted, st->realizable())) {
      throw invalid("chain for K = " + u.format(k) +
                    " is not a permutation of its realizable sets");
    }
    if (chain.front() != k) {
      throw invalid("chain for K = " + u.format(k) + " does not start at K");
    }
    entries.push_back({k, st, LinearSetOrder::from_chain(std::move(chain))});
  }
  return ChangeOperator(std::move(base), std::move(entries));
}

const FamilyEntry& ChangeOperator::entry(AltSet k) const {
  return entries_[index_in(base_, k)];
}

ChangeOperator fit_family(
    Universe universe, std::vector<AltSet> domain,
    std::vector<std::pair<AltSet, std::vector<AltSet>>> realizable_family) {
  std::vector<FamilySpec> family;
  family.reserve(realizable_family.size());
  for (auto& [k, real] : realizable_family) {
    family.push_back({k, std::move(real), std::nullopt});
  }
  return ChangeOperator::create(std::move(universe), std::move(domain),
                                std::move(family));
}

AltSet revise(const ChangeOperator& op, AltSet k, AltSet s) {
  const auto& e = op.entry(k);
  index_in(op.base(), s);
  return evaluate(e.order, k, s);
}

ChangeTable ChangeTable::tabulate(const ChangeOperator& op) {
  std::vector<std::vector<AltSet>> rows;
  rows.reserve(op.entries().size());
  for (const auto& e : op.entries()) {
    std::vector<AltSet> row;
    row.reserve(op.domain().size());
    for (auto s : op.domain()) row.push_back(evaluate(e.order, e.k, s));
    rows.push_back(std::move(row));
  }
  return ChangeTable(op.base(), std::move(rows));
}

ChangeTable ChangeTable::create(Universe universe, std::vector<AltSet> domain,
                                std::vector<std::vector<AltSet>> rows) {
  auto base = make_base(std::move(universe), std::move(domain));
  const auto n = base->domain().size();
  if (rows.size() != n) {
    throw Error(ErrorKind::kInvalidTable, "operator table needs " +
                                              std::to_string(n) + " rows");
  }
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw Error(ErrorKind::kInvalidTable, "operator table needs " +
                                                std::to_string(n) + " columns");
    }
    for (auto v : row) {
      if (!base->in_domain(v)) {
        throw Error(ErrorKind::kInvalidTable,
                    "operator value " + base->universe().format(v) +
                        " is not in the domain");
      }
    }
  }
  return ChangeTable(std::move(base), std::move(rows));
}

AltSet ChangeTable::operator()(AltSet k, AltSet s) const {
  return rows_[index_in(base_, k)][index_in(base_, s)];
}

void ChangeTable::set(AltSet k, AltSet s, AltSet value) {
  if (!base_->in_domain(value)) {
    throw Error(ErrorKind::kInvalidTable,
                "operator value " + base_->universe().format(value) +
                    " is not in the domain");
  }
  rows_[index_in(base_, k)][index_in(base_, s)] = value;
}

ChoiceFunctionTable ChangeTable::for_k(AltSet k) const {
  return ChoiceFunctionTable::from_function(base_, k, rows_[index_in(base_, k)]);
}

AxiomReport check_lcr(const ChangeTable& table, Axiom lcr) {
  const Axiom ss = underlying_ss(lcr);
  const auto domain = table.domain();
  std::vector<AxiomReport> per_k(domain.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < domain.size(); ++i) {
    per_k[i] = check_axiom(table.for_k(domain[i]), ss);
  }
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (per_k[i].holds) continue;
    AxiomReport out{lcr, false, {domain[i]}};
    out.witness.insert(out.witness.end(), per_k[i].witness.begin(),
                       per_k[i].witness.end());
    return out;
  }
  return AxiomReport{lcr, true, {}};
}

std::vector<AxiomReport> lcr_certify(const ChangeTable& table) {
  std::vector<AxiomReport> out;
  for (auto a : kLcr) out.push_back(check_lcr(table, a));
  return out;
}

std::vector<AxiomReport> lcr_certify(const ChangeOperator& op) {
  return lcr_certify(ChangeTable::tabulate(op));
}

bool replay_lcr(const ChangeTable& table, const AxiomReport& report) {
  if (report.witness.empty()) return false;
  AxiomReport inner{underlying_ss(report.axiom), false,
                    {report.witness.begin() + 1, report.witness.end()}};
  return replay(table.for_k(report.witness.front()), inner);
}

ChangeOperator reconstruct(const ChangeTable& table) {
  for (const auto& r : lcr_certify(table)) {
    if (!r.holds) throw AxiomViolationError(r);
  }
  std::vector<FamilySpec> family;
  for (auto k : table.domain()) {
    auto restricted = restrict_to_image(table.for_k(k));
    auto trace = synthesize(restricted);
    family.push_back({k, trace.image,
                      std::vector<AltSet>(trace.final_order.chain().begin(),
                                          trace.final_order.chain().end())});
  }
  const auto& base = *table.base();
  return ChangeOperator::create(
      base.universe(), std::vector<AltSet>(base.domain().begin(), base.domain().end()),
      std::move(family));
}

}  // namespace linchoice
