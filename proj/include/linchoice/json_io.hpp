#ifndef LINCHOICE_JSON_IO_HPP_
#define LINCHOICE_JSON_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"
#include "linchoice/argumentation.hpp"
#include "linchoice/axioms.hpp"
#include "linchoice/change.hpp"
#include "linchoice/oracle.hpp"
#include "linchoice/structure.hpp"
#include "linchoice/synthesis.hpp"

namespace linchoice {

// Every file carries "format_version": 1. Sets are arrays of alternative
// names; malformed documents raise Error(kFormat).

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json set_to_json(const Universe& u, AltSet s);
AltSet set_from_json(const Universe& u, const Json& j);

Json structure_to_json(const RestrictedChoiceStructure& s);
StructurePtr structure_from_json(const Json& j);

Json table_to_json(const ChoiceFunctionTable& t);
/// Every domain member must appear exactly once in "map".
ChoiceFunctionTable table_from_json(const Json& j, const StructurePtr& s);

struct OrderFile {
  LinearSetOrder order;
  std::optional<AltSet> fallback;
};
Json order_to_json(const LinearSetOrder& o, const Universe& u,
                   std::optional<AltSet> fallback = std::nullopt);
OrderFile order_from_json(const Json& j, const Universe& u);

/// {"carrier": [...], "pairs": [[i, j], ...]} with carrier indices.
Json relation_to_json(const Relation& r, const Universe& u);
Relation relation_from_json(const Json& j, const Universe& u);

Json report_to_json(const AxiomReport& r, const Universe& u);
Json trace_to_json(const SynthesisTrace& t, const Universe& u);

Json operator_to_json(const ChangeOperator& op);
ChangeOperator operator_from_json(const Json& j);

Json semantics_config_to_json(const SemanticsConfig& c);
SemanticsConfig semantics_config_from_json(const Json& j);

Json summary_to_json(const SweepSummary& s);
Json verdict_to_json(const OracleVerdict& v);

Json error_to_json(const Error& e);

/// Throws Error(kIo) when the file cannot be read.
std::string read_text_file(const std::string& path);
/// Throws Error(kIo) or Error(kFormat).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace linchoice

#endif  // LINCHOICE_JSON_IO_HPP_
