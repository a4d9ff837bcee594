#include "cli.hpp"

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "linchoice/argumentation.hpp"
#include "linchoice/axioms.hpp"
#include "linchoice/change.hpp"
#include "linchoice/error.hpp"
#include "linchoice/json_io.hpp"
#include "linchoice/oracle.hpp"
#include "linchoice/synthesis.hpp"

namespace linchoice::cli {

namespace {

struct Options {
  std::string structure, table, order, op, apx, config;
  std::string input, fallback, k, s, query, suite;
  bool trace = false, serial = false, certify = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json reports_to_json(const std::vector<AxiomReport>& reports,
                     const Universe& u) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r, u));
  j["reports"] = std::move(list);
  return j;
}

StructurePtr load_structure(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return structure_from_json(parse_json(text));
  }
  return structure_from_json(read_json_file(path));
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  auto st = load_structure(o.structure, in);
  const auto& u = st->universe();
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["valid"] = true;
  j["alternatives"] = u.size();
  j["domain"] = st->domain().size();
  j["realizable"] = st->realizable().size();
  j["union_closed"] = is_union_closed(*st);
  std::optional<AltSet> k;
  if (!o.fallback.empty()) k = u.parse_list(o.fallback);
  if (!o.table.empty()) {
    auto t = table_from_json(read_json_file(o.table), st);
    auto bad = t.choice_function_violation();
    j["table"] = {{"choice_function", !bad.has_value()},
                  {"violation", bad ? set_to_json(u, *bad) : Json(nullptr)}};
    if (!k) k = t.fallback();
  }
  if (!o.order.empty()) {
    auto file = order_from_json(read_json_file(o.order), u);
    if (!k) k = file.fallback;
    bool realizable = true;
    for (auto e : file.order.chain()) realizable &= st->is_realizable(e);
    Json oj = Json::object();
    oj["carrier_realizable"] = realizable;
    oj["smooth"] = is_smooth(file.order, *st);
    oj["k_minimal"] = k ? Json(is_k_minimal(file.order, *k)) : Json(nullptr);
    j["order"] = std::move(oj);
  }
  emit(out, j);
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  auto st = structure_from_json(read_json_file(o.structure));
  const auto& u = st->universe();
  auto file = order_from_json(read_json_file(o.order), u);
  AltSet k;
  if (!o.fallback.empty()) {
    k = u.parse_list(o.fallback);
  } else if (file.fallback) {
    k = *file.fallback;
  } else {
    k = file.order.chain().front();
  }
  const AltSet s = u.parse_list(o.input);
  if (!st->in_domain(s)) {
    throw Error(ErrorKind::kOutOfDomain, u.format(s) + " is not in the domain");
  }
  auto table = table_from_order(file.order, k, st);
  emit(out, {{"format_version", kFormatVersion},
             {"choice", set_to_json(u, table(s))}});
  return kExitOk;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  auto st = structure_from_json(read_json_file(o.structure));
  auto t = table_from_json(read_json_file(o.table), st);
  std::string suite = o.suite;
  if (suite.empty()) suite = is_union_closed(*st) ? "ss" : "sse";
  std::vector<AxiomReport> reports;
  if (suite == "ss") {
    reports = check_suite(t, Suite::kUnionClosed);
  } else if (suite == "sse") {
    reports = check_suite(t, Suite::kGeneral);
  } else {
    // LCR and LCA view the table as one slice of an operator / semantics.
    const bool lcr = suite == "lcr";
    for (auto ss : {Axiom::kSS1, Axiom::kSS2, Axiom::kSS3, Axiom::kSS4,
                    Axiom::kSS5, Axiom::kSS6}) {
      auto r = check_ss(t, ss);
      r.axiom = lcr ? as_lcr(ss) : as_lca(ss);
      if (lcr && !r.holds) r.witness.insert(r.witness.begin(), t.fallback());
      reports.push_back(std::move(r));
    }
  }
  Json j = reports_to_json(reports, st->universe());
  j["suite"] = suite;
  emit(out, j);
  return kExitOk;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  auto st = structure_from_json(read_json_file(o.structure));
  auto t = table_from_json(read_json_file(o.table), st);
  std::optional<SynthesisTrace> result;
  try {
    result = synthesize(t);
  } catch (const AxiomViolationError& e) {
    Json j = error_to_json(e);
    j["error"]["report"] = report_to_json(e.report(), st->universe());
    emit(out, j);
    return kExitDomainError;
  }
  const auto& trace = *result;
  Json j = order_to_json(trace.final_order, st->universe(), t.fallback());
  if (o.trace) {
    auto tj = trace_to_json(trace, st->universe());
    tj.erase("format_version");
    j["trace"] = std::move(tj);
  }
  emit(out, j);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  auto st = structure_from_json(read_json_file(o.structure));
  std::optional<AltSet> k;
  if (!o.k.empty()) k = st->universe().parse_list(o.k);
  auto summary = o.serial ? sweep_serial(st, k) : sweep_parallel(st, k);
  emit(out, summary_to_json(summary));
  return kExitOk;
}

int cmd_change(const Options& o, std::ostream& out) {
  auto op = operator_from_json(read_json_file(o.op));
  const auto& u = op.universe();
  if (o.certify) {
    emit(out, reports_to_json(lcr_certify(op), u));
    return kExitOk;
  }
  const AltSet r = revise(op, u.parse_list(o.k), u.parse_list(o.s));
  emit(out, {{"format_version", kFormatVersion}, {"revised", set_to_json(u, r)}});
  return kExitOk;
}

int cmd_af(const Options& o, std::ostream& out) {
  auto af = parse_apx(read_text_file(o.apx));
  auto sem = ChoiceExtensionSemantics::bind(
      semantics_config_from_json(read_json_file(o.config)), af);
  const auto& u = af.arguments();
  if (o.certify) {
    emit(out, reports_to_json(lca_certify(sem), u));
    return kExitOk;
  }
  emit(out, {{"format_version", kFormatVersion},
             {"choice", set_to_json(u, pi_evaluate(sem, u.parse_list(o.query)))}});
  return kExitOk;
}

Json usage_error(const std::string& detail) {
  return {{"error", {{"kind", "Usage"}, {"detail", detail}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted choice structures: evaluation, axioms, synthesis",
               "linchoice"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check structure invariants");
  validate->add_option("structure", o.structure, "structure.json or -")
      ->required();
  validate->add_option("--table", o.table, "also check a table");
  validate->add_option("--order", o.order, "also check an order");
  validate->add_option("--fallback", o.fallback, "fallback for the order");

  auto* eval = app.add_subcommand("eval", "Evaluate the choice of an order");
  eval->add_option("structure", o.structure)->required();
  eval->add_option("order", o.order)->required();
  eval->add_option("--input", o.input, "comma separated set")->required();
  eval->add_option("--fallback", o.fallback,
                   "defaults to the order file's fallback, else its least set");

  auto* axioms = app.add_subcommand("axioms", "Check a postulate suite");
  axioms->add_option("structure", o.structure)->required();
  axioms->add_option("table", o.table)->required();
  axioms->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"ss", "sse", "lcr", "lca"}));

  auto* synth = app.add_subcommand("synthesize", "Build a witnessing order");
  synth->add_option("structure", o.structure)->required();
  synth->add_option("table", o.table)->required();
  synth->add_flag("--trace", o.trace, "include every pipeline stage");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive representability sweep");
  oracle->add_option("structure", o.structure)->required();
  oracle->add_option("--k", o.k, "only this fallback");
  oracle->add_flag("--serial", o.serial, "use the single threaded sweep");

  auto* change = app.add_subcommand("change", "Revise with a change operator");
  change->add_option("operator", o.op)->required();
  auto* change_k = change->add_option("--k", o.k, "current set K");
  auto* change_s = change->add_option("--s", o.s, "new information S");
  change->add_flag("--certify", o.certify, "check LCR1-LCR6");

  auto* af = app.add_subcommand("af", "Choice-based extension semantics");
  af->add_option("framework", o.apx, "framework.apx")->required();
  af->add_option("--config", o.config, "semantics.json")->required();
  auto* query = af->add_option("--query", o.query, "comma separated arguments");
  auto* certify = af->add_flag("--certify", o.certify, "check LCA1-LCA6");
  query->excludes(certify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (af->parsed() && !o.certify && query->count() == 0) {
      throw CLI::RequiredError("--query");
    }
    if (change->parsed() && !o.certify &&
        (change_k->count() == 0 || change_s->count() == 0)) {
      throw CLI::RequiredError("--k and --s");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit(out, usage_error(e.what()));
    err << app.help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, in, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (axioms->parsed()) return cmd_axioms(o, out);
    if (synth->parsed()) return cmd_synthesize(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (change->parsed()) return cmd_change(o, out);
    if (af->parsed()) return cmd_af(o, out);
  } catch (const Error& e) {
    emit(out, error_to_json(e));
    return kExitDomainError;
  } catch (const std::exception& e) {
    emit(out, {{"error", {{"kind", "Internal"}, {"detail", e.what()}}}});
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace linchoice::cli
