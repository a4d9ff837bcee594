#include "linchoice/json_io.hpp"

#include <fstream>
#include <sstream>

#include "linchoice/error.hpp"

namespace linchoice {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string(what) + ": " + e.what());
  }
}

void check_version(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kFormat, "expected a JSON object");
  if (j.contains("format_version") && j["format_version"] != kFormatVersion) {
    throw Error(ErrorKind::kFormat, "unsupported format_version " +
                                        j["format_version"].dump());
  }
}

Json versioned() {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  return j;
}

Json sets_to_json(const Universe& u, std::span<const AltSet> sets) {
  Json a = Json::array();
  for (auto s : sets) a.push_back(set_to_json(u, s));
  return a;
}

std::vector<AltSet> sets_from_json(const Universe& u, const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::kFormat, "expected a list of sets");
  std::vector<AltSet> out;
  out.reserve(j.size());
  for (const auto& s : j) out.push_back(set_from_json(u, s));
  return out;
}

Universe universe_from_json(const Json& j) {
  return Universe(j.at("alternatives").get<std::vector<std::string>>());
}

}  // namespace

Json set_to_json(const Universe& u, AltSet s) { return Json(u.names_of(s)); }

AltSet set_from_json(const Universe& u, const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorKind::kFormat, "a set must be a list of names, got " +
                                        j.dump());
  }
  return guarded("set", [&] {
    return u.parse(j.get<std::vector<std::string>>());
  });
}

Json structure_to_json(const RestrictedChoiceStructure& s) {
  Json j = versioned();
  j["alternatives"] = s.universe().names();
  j["domain"] = sets_to_json(s.universe(), s.domain());
  j["realizable"] = sets_to_json(s.universe(), s.realizable());
  return j;
}

StructurePtr structure_from_json(const Json& j) {
  check_version(j);
  return guarded("structure", [&] {
    Universe u = universe_from_json(j);
    auto domain = sets_from_json(u, j.at("domain"));
    auto realizable = sets_from_json(u, j.at("realizable"));
    return make_structure(std::move(u), std::move(domain),
                          std::move(realizable));
  });
}

Json table_to_json(const ChoiceFunctionTable& t) {
  const auto& u = t.structure().universe();
  Json j = versioned();
  j["fallback"] = set_to_json(u, t.fallback());
  Json map = Json::array();
  for (std::size_t i = 0; i < t.values().size(); ++i) {
    map.push_back({{"in", set_to_json(u, t.structure().domain()[i])},
                   {"out", set_to_json(u, t.at(i))}});
  }
  j["map"] = std::move(map);
  return j;
}

ChoiceFunctionTable table_from_json(const Json& j, const StructurePtr& s) {
  check_version(j);
  return guarded("table", [&] {
    const auto& u = s->universe();
    const AltSet k = set_from_json(u, j.at("fallback"));
    std::vector<std::optional<AltSet>> slots(s->domain().size());
    for (const auto& entry : j.at("map")) {
      const AltSet in = set_from_json(u, entry.at("in"));
      auto idx = s->domain_index(in);
      if (!idx) {
        throw Error(ErrorKind::kOutOfDomain,
                    "table input " + u.format(in) + " is not in the domain");
      }
      if (slots[*idx]) {
        throw Error(ErrorKind::kInvalidTable,
                    "table lists input " + u.format(in) + " twice");
      }
      slots[*idx] = set_from_json(u, entry.at("out"));
    }
    std::vector<AltSet> values;
    values.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!slots[i]) {
        throw Error(ErrorKind::kInvalidTable,
                    "table has no entry for " + u.format(s->domain()[i]));
      }
      values.push_back(*slots[i]);
    }
    return ChoiceFunctionTable::from_function(s, k, std::move(values));
  });
}

Json order_to_json(const LinearSetOrder& o, const Universe& u,
                   std::optional<AltSet> fallback) {
  Json j = versioned();
  j["carrier_chain"] = sets_to_json(u, o.chain());
  if (fallback) j["fallback"] = set_to_json(u, *fallback);
  return j;
}

OrderFile order_from_json(const Json& j, const Universe& u) {
  check_version(j);
  return guarded("order", [&] {
    auto order = LinearSetOrder::from_chain(sets_from_json(u, j.at("carrier_chain")));
    std::optional<AltSet> k;
    if (j.contains("fallback")) k = set_from_json(u, j["fallback"]);
    return OrderFile{std::move(order), k};
  });
}

Json relation_to_json(const Relation& r, const Universe& u) {
  Json j = versioned();
  j["carrier"] = sets_to_json(u, r.carrier().elements());
  Json pairs = Json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back({a, b});
  j["pairs"] = std::move(pairs);
  return j;
}

Relation relation_from_json(const Json& j, const Universe& u) {
  check_version(j);
  return guarded("relation", [&] {
    Carrier c(sets_from_json(u, j.at("carrier")));
    auto pairs = j.at("pairs").get<std::vector<IndexPair>>();
    return Relation(std::move(c), pairs);
  });
}

Json report_to_json(const AxiomReport& r, const Universe& u) {
  Json j = Json::object();
  j["axiom"] = std::string(to_string(r.axiom));
  j["holds"] = r.holds;
  j["witness"] = sets_to_json(u, r.witness);
  return j;
}

Json trace_to_json(const SynthesisTrace& t, const Universe& u) {
  auto strip = [](Json j) {
    j.erase("format_version");
    return j;
  };
  Json j = versioned();
  j["image"] = sets_to_json(u, t.image);
  j["encoded"] = strip(relation_to_json(t.encoded, u));
  j["extended"] = strip(relation_to_json(t.extended, u));
  j["linear"] = strip(relation_to_json(t.linear, u));
  j["final"] = strip(order_to_json(t.final_order, u));
  return j;
}

Json operator_to_json(const ChangeOperator& op) {
  const auto& u = op.universe();
  Json j = versioned();
  j["alternatives"] = u.names();
  j["domain"] = sets_to_json(u, op.domain());
  Json family = Json::array();
  for (const auto& e : op.entries()) {
    family.push_back({{"k", set_to_json(u, e.k)},
                      {"realizable", sets_to_json(u, e.structure->realizable())},
                      {"chain", sets_to_json(u, e.order.chain())}});
  }
  j["family"] = std::move(family);
  return j;
}

ChangeOperator operator_from_json(const Json& j) {
  check_version(j);
  return guarded("operator", [&] {
    Universe u = universe_from_json(j);
    auto domain = sets_from_json(u, j.at("domain"));
    std::vector<FamilySpec> family;
    for (const auto& f : j.at("family")) {
      FamilySpec spec{set_from_json(u, f.at("k")),
                      sets_from_json(u, f.at("realizable")), std::nullopt};
      if (f.contains("chain")) spec.chain = sets_from_json(u, f["chain"]);
      family.push_back(std::move(spec));
    }
    return ChangeOperator::create(std::move(u), std::move(domain),
                                  std::move(family));
  });
}

Json semantics_config_to_json(const SemanticsConfig& c) {
  Json j = versioned();
  if (const auto* gen = std::get_if<ExtensionSemantics>(&c.realizable)) {
    j["realizable"] = std::string(to_string(*gen));
  } else {
    j["realizable"] = {
        {"explicit", std::get<std::vector<std::vector<std::string>>>(c.realizable)}};
  }
  j["fallback"] = c.fallback;
  if (c.chain) j["chain"] = *c.chain;
  return j;
}

SemanticsConfig semantics_config_from_json(const Json& j) {
  check_version(j);
  return guarded("semantics config", [&] {
    SemanticsConfig c;
    const auto& r = j.at("realizable");
    if (r.is_string()) {
      auto gen = parse_extension_semantics(r.get<std::string>());
      if (!gen) {
        throw Error(ErrorKind::kFormat,
                    "unknown realizable generator " + r.dump());
      }
      c.realizable = *gen;
    } else {
      c.realizable =
          r.at("explicit").get<std::vector<std::vector<std::string>>>();
    }
    c.fallback = j.at("fallback").get<std::vector<std::string>>();
    if (j.contains("chain")) {
      c.chain = j["chain"].get<std::vector<std::vector<std::string>>>();
    }
    return c;
  });
}

Json summary_to_json(const SweepSummary& s) {
  Json j = versioned();
  j["tables_checked"] = s.tables_checked;
  j["representable"] = s.representable;
  j["axioms_hold"] = s.axioms_hold;
  j["violations"] = s.violations;
  if (s.first_violation) {
    auto t = table_to_json(*s.first_violation);
    t.erase("format_version");
    j["first_violation"] = std::move(t);
  }
  return j;
}

Json verdict_to_json(const OracleVerdict& v) {
  const auto& u = v.table.structure().universe();
  Json j = versioned();
  j["representable"] = v.representable;
  j["axioms_hold"] = v.axioms_hold;
  if (v.witness_order) {
    j["witness_order"] = sets_to_json(u, v.witness_order->chain());
  } else {
    j["witness_order"] = nullptr;
  }
  return j;
}

Json error_to_json(const Error& e) {
  return {{"error",
           {{"kind", std::string(to_string(e.kind()))}, {"detail", e.detail()}}}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kFormat, e.what());
  }
}

Json read_json_file(const std::string& path) {
  return parse_json(read_text_file(path));
}

}  // namespace linchoice
