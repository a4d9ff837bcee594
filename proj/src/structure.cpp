#include "linchoice/structure.hpp"

#include <algorithm>
#include <string>

#include "linchoice/error.hpp"

namespace linchoice {

namespace {

constexpr std::size_t kDenseIndexLimit = 20;

void require_canonical(std::vector<AltSet>& sets, const char* what) {
  auto copy = sets;
  canonicalize(copy);
  if (copy.size() != sets.size()) {
    throw Error(ErrorKind::kInvalidStructure,
                std::string(what) + " lists the same set twice");
  }
  sets = std::move(copy);
}

}  // namespace

RestrictedChoiceStructure RestrictedChoiceStructure::create(
    Universe universe, std::vector<AltSet> domain,
    std::vector<AltSet> realizable) {
  if (domain.empty()) {
    throw Error(ErrorKind::kInvalidStructure, "domain is empty");
  }
  if (realizable.empty()) {
    throw Error(ErrorKind::kInvalidStructure, "realizable set is empty");
  }
  require_canonical(domain, "domain");
  require_canonical(realizable, "realizable");
  const AltSet all = universe.all();
  for (auto s : domain) {
    if (!s.subset_of(all)) {
      throw Error(ErrorKind::kInvalidStructure,
                  "domain member uses an undeclared alternative");
    }
  }
  for (auto e : realizable) {
    if (!canonical_contains(domain, e)) {
      throw Error(ErrorKind::kInvalidStructure,
                  "realizable set " + universe.format(e) +
                      " is not in the domain");
    }
  }

  RestrictedChoiceStructure out;
  out.universe_ = std::move(universe);
  out.domain_ = std::move(domain);
  out.realizable_ = std::move(realizable);
  if (out.universe_.size() <= kDenseIndexLimit) {
    out.dense_index_.assign(std::size_t{1} << out.universe_.size(), -1);
    for (std::size_t i = 0; i < out.domain_.size(); ++i) {
      out.dense_index_[out.domain_[i].bits()] = static_cast<std::int32_t>(i);
    }
  }
  return out;
}

StructurePtr make_structure(Universe universe, std::vector<AltSet> domain,
                            std::vector<AltSet> realizable) {
  return std::make_shared<const RestrictedChoiceStructure>(
      RestrictedChoiceStructure::create(std::move(universe), std::move(domain),
                                        std::move(realizable)));
}

std::optional<std::size_t> RestrictedChoiceStructure::domain_index(
    AltSet s) const {
  if (!dense_index_.empty()) {
    if (s.bits() >= dense_index_.size()) return std::nullopt;
    auto v = dense_index_[s.bits()];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  }
  auto it = std::lower_bound(domain_.begin(), domain_.end(), s);
  if (it == domain_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - domain_.begin());
}

bool RestrictedChoiceStructure::is_realizable(AltSet s) const {
  return canonical_contains(realizable_, s);
}

bool RestrictedChoiceStructure::has_realizable_subset(AltSet s) const {
  return std::any_of(realizable_.begin(), realizable_.end(),
                     [s](AltSet e) { return e.subset_of(s); });
}

bool is_union_closed(const RestrictedChoiceStructure& structure) {
  auto domain = structure.domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (!structure.in_domain(domain[i] | domain[j])) return false;
    }
  }
  return true;
}

ChoiceFunctionTable ChoiceFunctionTable::from_function(
    StructurePtr structure, AltSet fallback, std::vector<AltSet> values) {
  if (!structure) {
    throw Error(ErrorKind::kInvalidTable, "table without a structure");
  }
  const auto& s = *structure;
  if (!s.is_realizable(fallback)) {
    throw Error(ErrorKind::kFallbackNotRealizable,
                "fallback " + s.universe().format(fallback) +
                    " is not realizable");
  }
  if (values.size() != s.domain().size()) {
    throw Error(ErrorKind::kInvalidTable,
                "table has " + std::to_string(values.size()) +
                    " entries for a domain of " +
                    std::to_string(s.domain().size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!s.is_realizable(values[i])) {
      throw Error(ErrorKind::kInvalidTable,
                  "value " + s.universe().format(values[i]) + " for input " +
                      s.universe().format(s.domain()[i]) +
                      " is not realizable");
    }
  }
  return ChoiceFunctionTable(std::move(structure), fallback, std::move(values));
}

ChoiceFunctionTable ChoiceFunctionTable::create(StructurePtr structure,
                                                AltSet fallback,
                                                std::vector<AltSet> values) {
  auto table =
      from_function(std::move(structure), fallback, std::move(values));
  if (auto bad = table.choice_function_violation()) {
    const auto& u = table.structure().universe();
    throw Error(ErrorKind::kInvalidTable,
                "value for input " + u.format(*bad) +
                    " breaks the choice-function condition");
  }
  return table;
}

AltSet ChoiceFunctionTable::operator()(AltSet s) const {
  auto idx = structure_->domain_index(s);
  if (!idx) {
    throw Error(ErrorKind::kOutOfDomain,
                structure_->universe().format(s) + " is not in the domain");
  }
  return values_[*idx];
}

std::optional<AltSet> ChoiceFunctionTable::choice_function_violation() const {
  auto domain = structure_->domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const AltSet s = domain[i];
    const AltSet v = values_[i];
    if (structure_->has_realizable_subset(s)) {
      if (!v.subset_of(s)) return s;
    } else if (v != fallback_) {
      return s;
    }
  }
  return std::nullopt;
}

bool ChoiceFunctionTable::operator==(const ChoiceFunctionTable& other) const {
  if (fallback_ != other.fallback_ || values_ != other.values_) return false;
  if (structure_ == other.structure_) return true;
  return std::ranges::equal(structure_->domain(), other.structure_->domain()) &&
         std::ranges::equal(structure_->realizable(),
                            other.structure_->realizable());
}

LinearSetOrder::LinearSetOrder(Relation order) : relation_(std::move(order)) {
  auto idx = chain_of(relation_);  // validates linearity
  chain_.reserve(idx.size());
  for (auto i : idx) chain_.push_back(relation_.carrier()[i]);
}

LinearSetOrder LinearSetOrder::from_chain(std::vector<AltSet> chain) {
  Carrier carrier = [&] {
    try {
      return Carrier(chain);
    } catch (const Error&) {
      throw Error(ErrorKind::kInvalidOrder, "chain lists the same set twice");
    }
  }();
  Relation r(std::move(carrier));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i; j < chain.size(); ++j) r.add(i, j);
  }
  return LinearSetOrder(std::move(r), std::move(chain));
}

std::optional<AltSet> min_of_input(const LinearSetOrder& order, AltSet s) {
  for (auto e : order.chain()) {
    if (e.subset_of(s)) return e;
  }
  return std::nullopt;
}

AltSet evaluate_chain(std::span<const AltSet> chain, AltSet fallback,
                      AltSet s) {
  for (auto e : chain) {
    if (e.subset_of(s)) return e;
  }
  return fallback;
}

AltSet evaluate(const LinearSetOrder& order, AltSet fallback, AltSet s) {
  return evaluate_chain(order.chain(), fallback, s);
}

bool is_k_minimal(const LinearSetOrder& order, AltSet k) {
  auto mins = min_elements(order.relation());
  return mins.size() == 1 && order.carrier()[mins.front()] == k;
}

bool is_smooth(const LinearSetOrder& order,
               const RestrictedChoiceStructure& structure) {
  const auto& r = order.relation();
  std::vector<std::size_t> below;
  for (auto s : structure.domain()) {
    below.clear();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.carrier()[i].subset_of(s)) below.push_back(i);
    }
    if (!below.empty() && min_elements(r, below).empty()) return false;
  }
  return true;
}

ChoiceFunctionTable table_from_order(const LinearSetOrder& order,
                                     AltSet fallback,
                                     const StructurePtr& structure) {
  for (auto e : order.chain()) {
    if (!structure->is_realizable(e)) {
      throw Error(ErrorKind::kCarrierNotRealizable,
                  "order carrier member " + structure->universe().format(e) +
                      " is not realizable");
    }
  }
  std::vector<AltSet> values;
  values.reserve(structure->domain().size());
  for (auto s : structure->domain()) {
    values.push_back(evaluate(order, fallback, s));
  }
  return ChoiceFunctionTable::from_function(structure, fallback,
                                            std::move(values));
}

}  // namespace linchoice
