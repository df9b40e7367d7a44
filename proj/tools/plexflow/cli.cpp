// Copyright 2026 The Plexflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plexflow/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "plexflow/audit/audit.hpp"
#include "plexflow/diff/diff.hpp"
#include "plexflow/fixture/openpredict.hpp"
#include "plexflow/predict/cross_validation.hpp"
#include "plexflow/query/cq.hpp"
#include "plexflow/query/evaluator.hpp"
#include "plexflow/query/parser.hpp"
#include "plexflow/rdf/io.hpp"
#include "plexflow/rdf/ntriples.hpp"
#include "plexflow/trace/timestamp.hpp"
#include "plexflow/util/error.hpp"
#include "plexflow/vocab/catalog.hpp"
#include "plexflow/workflow/model.hpp"

namespace plexflow::cli {
namespace {

using json = nlohmann::ordered_json;
using rdf::Term;

// Raised for bad flag values that CLI11 cannot catch itself.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool verbose = false;

  void info(const std::string& msg) const {
    if (verbose) err << "info: " << msg << '\n';
  }
};

// Writes to `path`, or to the output stream for "" and "-".
void emit(const Io& io, const std::string& path, std::string_view text) {
  if (path.empty() || path == "-") {
    io.out << text;
  } else {
    rdf::write_text_file(path, text);
  }
}

rdf::Graph load_graphs(const Io& io, const std::vector<std::string>& paths) {
  rdf::Graph g;
  for (const std::string& p : paths) {
    const rdf::Graph part = rdf::load_graph_file(p, vocab::prefix_map());
    io.info(p + ": " + std::to_string(part.size()) + " triples");
    for (const rdf::Triple& t : part.triples()) g.insert(t);
  }
  return g;
}

// Full IRI, <IRI>, or a CURIE with a known prefix.
Term parse_iri_arg(std::string_view text) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return Term::iri(text.substr(1, text.size() - 2));
  }
  if (text.find("://") != std::string_view::npos || text.rfind("urn:", 0) == 0) {
    return Term::iri(text);
  }
  try {
    return vocab::expand(text);
  } catch (const Error& e) {
    throw UsageError("not an IRI or known CURIE: " + std::string(text));
  }
}

std::map<std::string, Term> parse_params(const std::vector<std::string>& pairs) {
  std::map<std::string, Term> params;
  for (const std::string& p : pairs) {
    const std::size_t eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=IRI, got " + p);
    params.insert_or_assign(p.substr(0, eq), parse_iri_arg(p.substr(eq + 1)));
  }
  return params;
}

std::string table_output(const query::ResultTable& t, const std::string& format) {
  return format == "json" ? t.to_json() + "\n" : t.to_tsv();
}

// --- validate ---------------------------------------------------------------

struct ValidateArgs {
  std::vector<std::string> inputs;
  std::string output;
};

int cmd_validate(const Io& io, const ValidateArgs& a) {
  const rdf::Graph g = load_graphs(io, a.inputs);
  const std::vector<Term> workflows = workflow::find_workflows(g);
  if (workflows.empty()) {
    io.err << "error: no dul:Workflow p-plan:Plan found\n";
    return kExitFindings;
  }
  std::ostringstream report;
  std::size_t total = 0;
  for (const Term& wf : workflows) {
    const workflow::WorkflowModel model = workflow::read_workflow(g, wf);
    const auto violations = workflow::validate(model, &g);
    for (const workflow::Violation& v : violations) {
      io.err << "error: " << v.code << ' ' << v.subject.ntriples() << ' ' << v.message << '\n';
    }
    total += violations.size();
    report << wf.ntriples() << '\t' << model.steps.size() << " steps\t"
           << (violations.empty() ? "ok" : std::to_string(violations.size()) + " violations")
           << '\n';
  }
  emit(io, a.output, report.str());
  return total == 0 ? kExitOk : kExitFindings;
}

// --- query ------------------------------------------------------------------

struct QueryArgs {
  std::string query_file;
  std::vector<std::string> inputs;
  std::vector<std::string> params;
  std::string format = "tsv";
  std::string output;
};

int cmd_query(const Io& io, const QueryArgs& a) {
  query::Query q = query::parse_query(rdf::read_text_file(a.query_file), vocab::prefix_map());
  if (!a.params.empty()) q = query::bind_parameters(std::move(q), parse_params(a.params));
  const rdf::Graph g = load_graphs(io, a.inputs);
  emit(io, a.output, table_output(query::evaluate(q, g), a.format));
  return kExitOk;
}

// --- cq ---------------------------------------------------------------------

struct CqArgs {
  std::string id;
  std::vector<std::string> inputs;
  std::string workflow, from, to;
  std::string format = "json";
  std::string output;
};

int cmd_cq(const Io& io, const CqArgs& a) {
  const query::CqEntry& entry = query::find_cq(a.id);
  std::map<std::string, Term> params;
  const std::map<std::string, const std::string*> given = {
      {"workflow", &a.workflow}, {"from", &a.from}, {"to", &a.to}};
  for (const std::string& name : entry.parameters) {
    const std::string& value = *given.at(name);
    if (value.empty()) throw UsageError(entry.id + " needs --" + name);
    params.emplace(name, parse_iri_arg(value));
  }
  const rdf::Graph g = load_graphs(io, a.inputs);
  const query::ResultTable table = query::run_cq(entry.id, g, params);
  if (a.format == "tsv") {
    emit(io, a.output, table.to_tsv());
    return kExitOk;
  }
  json counts = json::object();
  for (const auto& [part, n] : query::part_counts(entry, table)) {
    counts[part.empty() ? "rows" : part] = n;
  }
  json doc;
  doc["id"] = entry.id;
  doc["question"] = entry.question;
  json p = json::object();
  for (const auto& [name, term] : params) p[name] = term.value();
  doc["parameters"] = std::move(p);
  doc["counts"] = std::move(counts);
  doc["results"] = json::parse(table.to_json());
  emit(io, a.output, doc.dump(2) + "\n");
  return kExitOk;
}

// --- diff -------------------------------------------------------------------

struct DiffArgs {
  std::vector<std::string> inputs;
  std::string from, to;
  std::string output;
};

int cmd_diff(const Io& io, const DiffArgs& a) {
  const rdf::Graph g = load_graphs(io, a.inputs);
  const diff::DiffReport report = diff::diff(g, parse_iri_arg(a.from), parse_iri_arg(a.to));
  emit(io, a.output, report.to_json() + "\n");
  return kExitOk;
}

// --- audit ------------------------------------------------------------------

struct AuditArgs {
  std::vector<std::string> inputs;
  std::string output;
};

int cmd_audit(const Io& io, const AuditArgs& a) {
  const audit::AuditReport report = audit::audit(load_graphs(io, a.inputs));
  for (const audit::RuleResult& r : report.results) {
    if (r.status != audit::Status::kFail) continue;
    io.err << (r.rule.severity == audit::Severity::kError ? "error: " : "warning: ") << r.rule.id
           << " failed for " << r.offenders.size() << " resource(s)\n";
  }
  emit(io, a.output, report.to_json() + "\n");
  return report.ok() ? kExitOk : kExitFindings;
}

// --- fixture ----------------------------------------------------------------

int cmd_fixture(const Io& io, const std::string& output) {
  emit(io, output, fixture::fixture_ntriples());
  if (output != "-") io.info("wrote " + output);
  return kExitOk;
}

// --- run-openpredict ----------------------------------------------------------

struct PredictArgs {
  std::string scheme = "associations";
  std::size_t folds = 10;
  std::size_t reps = 1;
  std::uint64_t seed = 42;
  std::size_t drugs = 100;
  std::size_t diseases = 80;
  std::size_t clusters = 8;
  bool permute = false;
  std::size_t threads = 0;
  std::vector<std::string> drug_sims;
  std::vector<std::string> disease_sims;
  std::string gold;
  std::string started_at = "2019-07-03T09:00:00Z";
  std::vector<std::string> workflow_graphs;
  std::string trace;
  std::string metrics;
};

predict::SimilarityBundle load_bundle(const PredictArgs& a) {
  if (a.drug_sims.size() != predict::kDrugMeasures ||
      a.disease_sims.size() != predict::kDiseaseMeasures) {
    throw UsageError("CSV input needs " + std::to_string(predict::kDrugMeasures) +
                     " --drug-sim and " + std::to_string(predict::kDiseaseMeasures) +
                     " --disease-sim files");
  }
  predict::SimilarityBundle b;
  auto load = [](const std::vector<std::string>& files, std::vector<std::string>& ids,
                 std::vector<predict::SquareMatrix>& into) {
    for (const std::string& f : files) {
      predict::LabeledMatrix m = predict::parse_similarity_csv(rdf::read_text_file(f));
      if (into.empty()) {
        ids = m.ids;
      } else if (m.ids != ids) {
        throw predict::PredictError(f + ": identifiers differ from " + files.front());
      }
      into.push_back(std::move(m.values));
    }
  };
  load(a.drug_sims, b.drug_ids, b.drug_sims);
  load(a.disease_sims, b.disease_ids, b.disease_sims);
  predict::validate(b);
  return b;
}

json metrics_json(const predict::Metrics& m) {
  json j;
  j["accuracy"] = m.accuracy;
  j["aupr"] = m.aupr;
  j["f1"] = m.f1;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["roc_auc"] = m.roc_auc;
  return j;
}

int cmd_predict(const Io& io, const PredictArgs& a) {
  predict::CvConfig cfg;
  cfg.scheme = predict::parse_scheme(a.scheme);
  cfg.folds = a.folds;
  cfg.repetitions = a.reps;
  cfg.seed = a.seed;
  cfg.threads = a.threads;

  predict::SyntheticData data;
  const bool from_csv = !a.drug_sims.empty() || !a.disease_sims.empty() || !a.gold.empty();
  if (from_csv) {
    if (a.gold.empty()) throw UsageError("CSV input needs --gold");
    data.bundle = load_bundle(a);
    data.gold = predict::parse_gold_csv(rdf::read_text_file(a.gold), data.bundle);
  } else {
    data = predict::make_synthetic(
        {.drugs = a.drugs, .diseases = a.diseases, .clusters = a.clusters, .seed = a.seed});
  }
  if (a.permute) data = predict::permute_labels(data, a.seed);
  io.info(std::to_string(data.bundle.drugs()) + " drugs, " +
          std::to_string(data.bundle.diseases()) + " diseases, " +
          std::to_string(data.gold.positives.size()) + " associations");

  predict::MetricsRecord record;
  if (!a.trace.empty()) {
    const rdf::Graph workflows =
        a.workflow_graphs.empty() ? fixture::generate_fixture() : load_graphs(io, a.workflow_graphs);
    const predict::TracedRun run = predict::run_and_trace(
        data.bundle, data.gold, cfg, workflows, trace::Timestamp::parse(a.started_at));
    emit(io, a.trace, rdf::serialize_ntriples(run.trace));
    record = run.metrics;
  } else {
    record = predict::cross_validate(data.bundle, data.gold, cfg);
  }

  json doc;
  json c;
  c["scheme"] = std::string(predict::scheme_name(cfg.scheme));
  c["folds"] = cfg.folds;
  c["repetitions"] = cfg.repetitions;
  c["seed"] = cfg.seed;
  c["source"] = from_csv ? "csv" : "synthetic";
  c["permuted"] = a.permute;
  c["drugs"] = data.bundle.drugs();
  c["diseases"] = data.bundle.diseases();
  c["associations"] = data.gold.positives.size();
  doc["config"] = std::move(c);
  doc["mean"] = metrics_json(record.mean);
  doc["stddev"] = metrics_json(record.stddev);
  json folds = json::array();
  for (const predict::Metrics& m : record.folds) folds.push_back(metrics_json(m));
  doc["folds"] = std::move(folds);
  const std::string text = doc.dump(2) + "\n";
  if (!a.metrics.empty()) {
    emit(io, a.metrics, text);
  } else if (a.trace != "-") {
    io.out << text;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Provenance-aware workflow graphs: validate, query, diff, audit, predict",
               "plexflow"};
  app.require_subcommand(1, 1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Progress messages on standard error");

  const std::vector<std::string> formats = {"tsv", "json"};

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "Check workflow structure invariants");
  validate->add_option("inputs", validate_args.inputs, "Graph files (.nt, .nq, .ttl)")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("-o,--output", validate_args.output, "Report file (default stdout)");

  QueryArgs query_args;
  CLI::App* query = app.add_subcommand("query", "Run a SPARQL query file over graph files");
  query->add_option("query", query_args.query_file, ".rq file")->required()->check(CLI::ExistingFile);
  query->add_option("inputs", query_args.inputs, "Graph files")->required()->check(CLI::ExistingFile);
  query->add_option("-p,--param", query_args.params, "Bind $NAME to an IRI (NAME=IRI)");
  query->add_option("-f,--format", query_args.format, "tsv or json")
      ->check(CLI::IsMember(formats));
  query->add_option("-o,--output", query_args.output, "Result file (default stdout)");

  CqArgs cq_args;
  CLI::App* cq = app.add_subcommand("cq", "Answer a competency question");
  cq->add_option("--id", cq_args.id, "Question id, e.g. CQ3.2")->required();
  cq->add_option("-g,--graph", cq_args.inputs, "Graph files")->required()->check(CLI::ExistingFile);
  cq->add_option("--workflow", cq_args.workflow, "Workflow IRI or CURIE");
  cq->add_option("--from", cq_args.from, "Older workflow IRI or CURIE");
  cq->add_option("--to", cq_args.to, "Newer workflow IRI or CURIE");
  cq->add_option("-f,--format", cq_args.format, "json (with counts) or tsv")
      ->check(CLI::IsMember(formats));
  cq->add_option("-o,--output", cq_args.output, "Result file (default stdout)");

  DiffArgs diff_args;
  CLI::App* diff = app.add_subcommand("diff", "Compare two workflow versions");
  diff->add_option("-g,--graph", diff_args.inputs, "Graph files")->required()->check(CLI::ExistingFile);
  diff->add_option("--from", diff_args.from, "Older workflow")->required();
  diff->add_option("--to", diff_args.to, "Newer workflow")->required();
  diff->add_option("-o,--output", diff_args.output, "JSON file (default stdout)");

  AuditArgs audit_args;
  CLI::App* audit = app.add_subcommand("audit", "FAIR audit; exit 1 on error-severity failures");
  audit->add_option("inputs", audit_args.inputs, "Graph files")->required()->check(CLI::ExistingFile);
  audit->add_option("-o,--output", audit_args.output, "JSON file (default stdout)");

  std::string fixture_output = "openpredict-fixture.nt";
  CLI::App* fixture = app.add_subcommand("fixture", "Write the OpenPREDICT v0.1/v0.2 graph");
  fixture->add_option("-o,--output", fixture_output, "N-Triples file, '-' for stdout")
      ->capture_default_str();

  PredictArgs predict_args;
  CLI::App* predict = app.add_subcommand("run-openpredict", "Cross-validate the drug-disease model");
  predict->add_option("--scheme", predict_args.scheme, "drugs or associations")
      ->check(CLI::IsMember({"drugs", "associations"}))
      ->capture_default_str();
  predict->add_option("--folds", predict_args.folds)->check(CLI::Range(2, 1000))->capture_default_str();
  predict->add_option("--reps", predict_args.reps)->check(CLI::Range(1, 1000))->capture_default_str();
  predict->add_option("--seed", predict_args.seed)->capture_default_str();
  predict->add_option("--drugs", predict_args.drugs, "Synthetic drugs")->capture_default_str();
  predict->add_option("--diseases", predict_args.diseases, "Synthetic diseases")->capture_default_str();
  predict->add_option("--clusters", predict_args.clusters, "Synthetic clusters")->capture_default_str();
  predict->add_flag("--permute-labels", predict_args.permute, "Replace the gold standard by random pairs");
  predict->add_option("--threads", predict_args.threads, "Fold workers, 0 = all cores");
  predict->add_option("--drug-sim", predict_args.drug_sims, "Drug similarity CSV (5 files)")
      ->check(CLI::ExistingFile);
  predict->add_option("--disease-sim", predict_args.disease_sims, "Disease similarity CSV (2 files)")
      ->check(CLI::ExistingFile);
  predict->add_option("--gold", predict_args.gold, "drug,disease CSV")->check(CLI::ExistingFile);
  predict->add_option("--workflow-graph", predict_args.workflow_graphs,
                      "Graph holding the traced step (default: the built-in fixture)")
      ->check(CLI::ExistingFile);
  predict->add_option("--started-at", predict_args.started_at, "Activity start (ISO 8601)")
      ->capture_default_str();
  predict->add_option("--trace", predict_args.trace, "Write the provenance trace (N-Triples)");
  predict->add_option("--metrics", predict_args.metrics, "Write metrics JSON (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const Io io{out, err, verbose};
  try {
    if (validate->parsed()) return cmd_validate(io, validate_args);
    if (query->parsed()) return cmd_query(io, query_args);
    if (cq->parsed()) return cmd_cq(io, cq_args);
    if (diff->parsed()) return cmd_diff(io, diff_args);
    if (audit->parsed()) return cmd_audit(io, audit_args);
    if (fixture->parsed()) return cmd_fixture(io, fixture_output);
    return cmd_predict(io, predict_args);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace plexflow::cli
