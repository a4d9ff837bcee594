#include "linchoice/synthesis.hpp"

#include <algorithm>
#include <string>

namespace linchoice {

AxiomViolationError::AxiomViolationError(AxiomReport report)
    : Error(ErrorKind::kAxiomViolation,
            std::string(to_string(report.axiom)) + " is violated"),
      report_(std::move(report)) {}

std::vector<AltSet> image(const ChoiceFunctionTable& table) {
  std::vector<AltSet> img(table.values().begin(), table.values().end());
  canonicalize(img);
  return img;
}

Relation encode(const ChoiceFunctionTable& table) {
  auto img = image(table);
  auto domain = table.structure().domain();
  Relation rel{Carrier(img)};
  auto index = [&](AltSet s) {
    return static_cast<std::size_t>(
        std::lower_bound(img.begin(), img.end(), s) - img.begin());
  };
  if (canonical_contains(img, table.fallback())) {
    const auto k = index(table.fallback());
    for (std::size_t j = 0; j < img.size(); ++j) rel.add(k, j);
  }
  for (std::size_t w = 0; w < domain.size(); ++w) {
    const AltSet chosen = table.at(w);
    const auto x = index(chosen);
    for (std::size_t y = 0; y < img.size(); ++y) {
      if ((chosen | img[y]).subset_of(domain[w])) rel.add(x, y);
    }
  }
  return rel;
}

Relation encode_union_closed(const ChoiceFunctionTable& table) {
  const auto& st = table.structure();
  if (!is_union_closed(st)) {
    throw Error(ErrorKind::kNotUnionClosed,
                "the union shortcut needs a union-closed domain; use the "
                "general encoding");
  }
  auto img = image(table);
  Relation rel{Carrier(img)};
  for (std::size_t x = 0; x < img.size(); ++x) {
    for (std::size_t y = 0; y < img.size(); ++y) {
      if (table(img[x] | img[y]) == img[x]) rel.add(x, y);
    }
  }
  return rel;
}

namespace {

std::vector<std::size_t> carrier_below(const Relation& rel, AltSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (rel.carrier()[i].subset_of(s)) out.push_back(i);
  }
  return out;
}

}  // namespace

AltSet evaluate_relation(const Relation& rel, AltSet fallback, AltSet s) {
  auto m = unique_min(rel, carrier_below(rel, s));
  return m ? rel.carrier()[*m] : fallback;
}

bool verify_compatible(const Relation& rel, const ChoiceFunctionTable& table) {
  const auto& st = table.structure();
  for (auto e : rel.carrier().elements()) {
    if (!st.is_realizable(e)) return false;
  }
  if (!has_property(rel, Property::kReflexive) ||
      !has_property(rel, Property::kAntisymmetric) ||
      !has_property(rel, Property::kConsistent)) {
    return false;
  }
  auto domain = st.domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    auto below = carrier_below(rel, domain[i]);
    auto mins = min_elements(rel, below);
    if (!below.empty() && mins.empty()) return false;  // not smooth
    const AltSet v =
        mins.size() == 1 ? rel.carrier()[mins.front()] : table.fallback();
    if (v != table.at(i)) return false;
  }
  return true;
}

SynthesisTrace synthesize(const ChoiceFunctionTable& table) {
  for (auto a : suite_axioms(Suite::kGeneral)) {
    auto report = check_axiom(table, a);
    if (!report.holds) throw AxiomViolationError(std::move(report));
  }
  auto internal = [](const std::string& what) {
    return Error(ErrorKind::kInternalIncompatibility, what);
  };

  auto img = image(table);
  Relation encoded = encode(table);
  if (!verify_compatible(encoded, table)) {
    throw internal("encoded relation is not compatible with the table");
  }
  Relation extended = [&] {
    try {
      return suzumura_extension(encoded);
    } catch (const Error& e) {
      throw internal(std::string("extension of the encoding failed: ") +
                     e.what());
    }
  }();
  Relation linear = linearize(extended);
  if (!verify_compatible(linear, table)) {
    throw internal("linearized order is not compatible with the table");
  }

  std::vector<AltSet> chain;
  for (auto i : chain_of(linear)) chain.push_back(linear.carrier()[i]);
  for (auto e : table.structure().realizable()) {
    if (!canonical_contains(img, e)) chain.push_back(e);
  }
  auto final_order = LinearSetOrder::from_chain(std::move(chain));
  if (!is_k_minimal(final_order, table.fallback())) {
    throw internal("expanded order is not minimal at the fallback");
  }
  if (!(table_from_order(final_order, table.fallback(),
                         table.structure_ptr()) == table)) {
    throw internal("expanded order does not reproduce the table");
  }
  return SynthesisTrace{std::move(img), std::move(encoded), std::move(extended),
                        std::move(linear), std::move(final_order)};
}

LinearSetOrder existence_order(const RestrictedChoiceStructure& structure,
                               AltSet k) {
  if (!structure.is_realizable(k)) {
    throw Error(ErrorKind::kFallbackNotRealizable,
                "fallback " + structure.universe().format(k) +
                    " is not realizable");
  }
  std::vector<AltSet> chain(structure.realizable().begin(),
                            structure.realizable().end());
  auto it = std::find(chain.begin(), chain.end(), k);
  std::iter_swap(chain.begin(), it);
  return LinearSetOrder::from_chain(std::move(chain));
}

ChoiceFunctionTable restrict_to_image(const ChoiceFunctionTable& table) {
  const auto& st = table.structure();
  auto img = image(table);
  auto restricted = make_structure(
      st.universe(), std::vector<AltSet>(st.domain().begin(), st.domain().end()),
      img);
  return ChoiceFunctionTable::from_function(
      restricted, table.fallback(),
      std::vector<AltSet>(table.values().begin(), table.values().end()));
}

}  // namespace linchoice
