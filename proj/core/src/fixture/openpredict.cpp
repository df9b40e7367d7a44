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

#include "plexflow/fixture/openpredict.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plexflow/rdf/ntriples.hpp"
#include "plexflow/trace/tracer.hpp"
#include "plexflow/vocab/terms.hpp"
#include "plexflow/workflow/language.hpp"
#include "plexflow/workflow/model.hpp"

namespace plexflow::fixture {
namespace {

namespace v = plexflow::vocab;
using rdf::Graph;
using rdf::Term;
using workflow::StepKind;
using workflow::WorkflowModel;

constexpr StepKind kManual = StepKind::kManual;
constexpr StepKind kScript = StepKind::kScript;

Term op(std::string_view local) { return Term::iri(std::string(v::opredict::kBase) + std::string(local)); }
Term iri(std::string_view full) { return Term::iri(full); }

std::string spaced(std::string s) {
  for (char& c : s) {
    if (c == '_') c = ' ';
  }
  return s;
}

const Term& english() {
  static const Term t = Term::iri(workflow::kEnglish);
  return t;
}
const Term& python() {
  static const Term t = Term::iri(workflow::kPython35);
  return t;
}

struct StepSpec {
  std::string name;         // local name without "Step_"
  StepKind kind;
  std::string instruction;  // local name without "Plan_"
  std::vector<std::string> inputs{};   // without "Variable_"
  std::vector<std::string> outputs{};  // without "Variable_"
  std::vector<std::string> precedes{};  // step names
  bool data_handling = false;
};

// Everything that may be shared between the two versions, keyed by IRI.
struct Registry {
  std::map<Term, workflow::Instruction> instructions;
  std::map<Term, workflow::UsageBinding> usages;
  std::map<Term, workflow::Distribution> distributions;
  std::map<Term, workflow::DatasetRecord> datasets;
  std::map<Term, workflow::AgentAssociation> associations;
  std::map<Term, workflow::QueryShape> shapes;

  workflow::Instruction& instruction(const std::string& name, const Term& language,
                                     const std::string& version) {
    workflow::Instruction i;
    i.iri = op("Plan_" + name);
    i.label = spaced(name);
    i.description = i.label;
    i.languages = {language};
    i.version = version;
    return instructions.insert_or_assign(i.iri, std::move(i)).first->second;
  }

  void usage(const std::string& instruction, const std::string& name, const std::string& label,
             std::vector<Term> entities) {
    workflow::UsageBinding u;
    u.iri = op("Usage_" + name);
    u.label = label;
    u.entities = {entities.begin(), entities.end()};
    instructions.at(op("Plan_" + instruction)).qualified_usages.insert(u.iri);
    usages.insert_or_assign(u.iri, std::move(u));
  }
};

Term variable(const std::string& name) { return op("Variable_" + name); }

class ModelBuilder {
 public:
  ModelBuilder(const Registry& registry, workflow::WorkflowDef head) : registry_(registry) {
    model_.workflow = std::move(head);
  }

  void add(const StepSpec& s, const Term& plan) {
    workflow::StepDef d;
    d.iri = op("Step_" + s.name);
    d.of_plan = plan;
    d.kinds = {s.kind};
    d.described_by = {op("Plan_" + s.instruction)};
    for (const std::string& in : s.inputs) d.input_vars.insert(variable(in));
    for (const std::string& out : s.outputs) d.output_vars.insert(variable(out));
    for (const std::string& next : s.precedes) d.precedes.insert(op("Step_" + next));
    if (s.data_handling) d.operation_class = iri(v::edam::kOperation2409);
    d.label = spaced(s.name);
    model_.steps.insert_or_assign(d.iri, std::move(d));
  }

  void add_all(const std::vector<StepSpec>& specs) {
    for (const StepSpec& s : specs) add(s, model_.workflow.iri);
  }

  // Pulls everything the steps reach out of the registry.
  WorkflowModel finish() {
    auto add_variable = [&](const Term& var) {
      std::string local = var.value().substr(v::opredict::kBase.size());
      model_.variables.emplace(var, workflow::VariableDef{var, spaced(local.substr(9))});
    };
    for (const auto& [iri, step] : model_.steps) {
      for (const Term& var : step.input_vars) add_variable(var);
      for (const Term& var : step.output_vars) add_variable(var);
      for (Term i : step.described_by) {
        while (model_.instructions.count(i) == 0) {
          const workflow::Instruction& ins = registry_.instructions.at(i);
          model_.instructions.emplace(i, ins);
          if (!ins.described_by) break;
          i = *ins.described_by;
        }
      }
    }
    for (const auto& [iri, ins] : model_.instructions) {
      for (const Term& u : ins.qualified_usages) {
        const workflow::UsageBinding& usage = registry_.usages.at(u);
        model_.usages.emplace(u, usage);
        for (const Term& e : usage.entities) {
          if (e.value().find("/Variable_") != std::string::npos) add_variable(e);
          auto dist = registry_.distributions.find(e);
          if (dist != registry_.distributions.end()) model_.distributions.insert(*dist);
        }
      }
    }
    for (const auto& [iri, ds] : registry_.datasets) {
      for (const Term& d : ds.distributions) {
        if (model_.distributions.count(d) != 0) model_.datasets.emplace(iri, ds);
      }
    }
    for (const auto& [iri, a] : registry_.associations) {
      for (const Term& p : a.plans) {
        if (p == model_.workflow.iri || model_.instructions.count(p) != 0) {
          model_.associations.emplace(iri, a);
        }
      }
    }
    for (const auto& [iri, q] : registry_.shapes) {
      if (q.target_usage && model_.usages.count(*q.target_usage) != 0) {
        model_.shapes.emplace(iri, q);
      }
    }
    return std::move(model_);
  }

 private:
  const Registry& registry_;
  WorkflowModel model_;
};

struct DatasetSpec {
  std::string key;           // shared by steps, variables and the dataset IRI
  std::string distribution;  // local name without "Distribution_"
  std::string file_label;
  std::string url;
  std::string_view format;
  std::string description;
  std::string license;
};

const std::vector<DatasetSpec>& dataset_specs() {
  static const std::vector<DatasetSpec> specs = {
      {"Drugbank_dataset", "pubchem_to_drugbank_pubchem.tsv", "data/mapping/pubchem.tsv",
       "https://raw.githubusercontent.com/dhimmel/drugbank/"
       "3e87872db5fca5ac427ce27464ab945c0ceb4ec6/data/mapping/pubchem.tsv",
       v::edam::kFormat2330, "Mapping between PubChem and DrugBank drug identifiers",
       "https://creativecommons.org/publicdomain/zero/1.0/"},
      {"Kegg_dataset", "release-4-kegg-kegg-drug.nq.gz", "release/4/kegg/kegg-drug.nq.gz",
       "http://download.bio2rdf.org/files/release/4/kegg/kegg-drug.nq.gz", v::edam::kFormat3256,
       "Bio2RDF release 4 KEGG drug graph", "https://creativecommons.org/licenses/by/4.0/"},
      {"Sider_dataset", "release-4-sider-sider-se.nq.gz", "release/4/sider/sider-se.nq.gz",
       "http://download.bio2rdf.org/files/release/4/sider/sider-se.nq.gz", v::edam::kFormat3256,
       "Bio2RDF release 4 SIDER side effect graph",
       "https://creativecommons.org/licenses/by-nc-sa/4.0/"},
      {"human_interactome_barabasi", "srep-2016-161017-srep35241-extref-srep35241-s3.txt",
       "srep35241-s3.txt",
       "https://media.nature.com/full/nature-assets/srep/2016/161017/srep35241/extref/"
       "srep35241-s3.txt",
       v::edam::kFormat2330, "Human protein-protein interaction network",
       "https://creativecommons.org/licenses/by/4.0/"},
      {"phenotype_annotation", "phenotype_annotation_hpoteam.tab_Build_1266",
       "phenotype_annotation_hpoteam.tab (build 1266)",
       "http://compbio.charite.de/jenkins/job/hpo.annotations/1266/artifact/misc/"
       "phenotype_annotation_hpoteam.tab",
       v::edam::kFormat2330, "HPO phenotype annotations of OMIM diseases",
       "https://hpo.jax.org/app/license"},
      {"gold_standard_drug_indications", "gold_standard_drug_indications_msb201126-s4.xls",
       "msb201126-s4.xls",
       "https://www.ncbi.nlm.nih.gov/pmc/articles/PMC3159979/bin/msb201126-s4.xls",
       v::edam::kFormat2330, "Gold standard of known drug indications",
       "https://creativecommons.org/licenses/by-nc-sa/3.0/"},
      {"mesh_annotation", "mesh_annotation_mim2mesh.tsv", "mim2mesh.tsv",
       "http://www.paccanarolab.org/static_content/disease_similarity/mim2mesh.tsv",
       v::edam::kFormat2330, "MeSH annotations of OMIM diseases",
       "https://creativecommons.org/licenses/by/4.0/"},
  };
  return specs;
}

const std::vector<std::string> kSparqlQueries = {"drug_smiles", "drug_targets",
                                                 "drug_target_sequences", "drug_side_effects",
                                                 "drug_go_annotations"};

// FAIRification guideline followed for both non-RDF sources; the license
// step uses one instruction for both datasets.
const std::vector<std::pair<std::string, bool>> kFairSteps = {
    {"Retrieve_non_FAIR_data", false},     {"Analyse_the_retrieved_data", false},
    {"Define_the_semantic_model", false},  {"Make_data_linkable", false},
    {"Assign_license", true},              {"Define_metadata", false},
    {"Deploy_FAIR_data_resource", false},  {"Validate_FAIR_data_resource", false},
    {"Document_FAIRification_process", false}};

// Feature-generation cells and the data file each one writes.
const std::vector<std::pair<std::string, std::string>> kFeatureCells = {
    {"drug_targets_tsv", "drug-targets.tsv"},
    {"drug_smiles_tsv", "drug-smiles.tsv"},
    {"drug_side_effects_tsv", "drug-side-effects.tsv"},
    {"human_interactome_tsv", "human-interactome.tsv"},
    {"disease_phenotypes_tsv", "disease-phenotypes.tsv"},
    {"drugs_target_seq_sim_csv", "drugs-target-seq-sim.csv"},
    {"drugs_ppi_sim_csv", "drugs-ppi-sim.csv"},
    {"drugs_se_sim_csv", "drugs-se-sim.csv"},
    {"drugs_target_go_sim_csv", "drugs-target-go-sim.csv"},
    {"diseases_pheno_sim_csv", "diseases-pheno-sim.csv"},
    {"drugs_fingerprint_sim_csv", "drugs-fingerprint-sim.csv"}};
// Inputs of feature cells 6-11, by index into kFeatureCells.
const std::vector<int> kSimilarityInput = {0, 3, 2, 0, 4, 1};

std::string cell_name(std::size_t i) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "Feature_generation_01_Pipeline_Source_Cell%02zu", i + 1);
  return buf;
}

Registry build_registry() {
  Registry r;
  // v0.1 instructions, one per main-protocol step.
  for (std::string name :
       {"Prepare_Input_Data_Files", "Format_results_for_presentation", "Install_GraphDB_triplestore",
        "Start_GraphDB_triplestore", "Create_repository_in_triplestore",
        "Save_files_in_triplestore"}) {
    r.instruction(name, english(), "0.1");
  }
  for (const DatasetSpec& d : dataset_specs()) {
    if (d.key == "gold_standard_drug_indications" || d.key == "mesh_annotation") continue;
    r.instruction("Download_" + d.key, english(), "0.1");
    r.instruction("Save_" + d.key, english(), "0.1");
    if (d.format == v::edam::kFormat3256) {
      r.instruction("Decompress_" + d.key, english(), "0.1");
    } else if (d.key != "Drugbank_dataset") {
      r.instruction("Clean_" + d.key, english(), "0.1");
      r.instruction("Execute_FAIRifier_process_to_" + d.key, english(), "0.1");
      for (const auto& [topic, shared] : kFairSteps) {
        if (shared) {
          r.instruction("FAIRification_" + topic, english(), "0.1");
        } else {
          r.instruction("FAIRify_" + d.key + "_" + topic, english(), "0.1");
        }
      }
    }
  }
  for (const std::string& q : kSparqlQueries) {
    r.instruction("Execute_SPARQL_query_" + q, english(), "0.1");
  }
  r.instruction("Feature_generation_Pipeline_OpenPREDICT_ipynb", python(), "0.1");
  r.instruction("Model_preparation_train_and_evaluation_Workflow_OpenPREDCIT_-_ML_ipynb",
                python(), "0.1");
  r.instruction("Model_preparation_train_and_evaluation", python(), "0.1")
      .extra_types.insert(iri(v::reprod::kCell));
  for (std::size_t i = 0; i < kFeatureCells.size(); ++i) {
    r.instruction(cell_name(i), python(), "0.1").extra_types.insert(iri(v::reprod::kCell));
  }

  // Specifications the notebook cells implement.
  const Term en = Term::typed_literal("en", v::xsd::kLanguage);
  const std::vector<std::string> specs = {"Specification_Load_input_datasets",
                                          "Specification_Compute_similarity_features",
                                          "Specification_Train_and_evaluate_model"};
  for (const std::string& s : specs) r.instruction(s, en, "0.1");
  for (std::size_t i = 0; i < 9; ++i) {
    r.instructions.at(op("Plan_" + cell_name(i))).described_by =
        op("Plan_" + specs[i < 5 ? 0 : 1]);
  }
  r.instructions.at(op("Plan_Model_preparation_train_and_evaluation")).described_by =
      op("Plan_" + specs[2]);

  // v0.2: three revisions and seven new scripts.
  auto revise = [&](const std::string& name, const std::string& old) {
    r.instruction(name, python(), "0.2").revision_of = op("Plan_" + old);
  };
  revise("Prepare_Input_Data_Files_v02", "Prepare_Input_Data_Files");
  revise("FAIRify_human_interactome_barabasi_v02",
         "Execute_FAIRifier_process_to_human_interactome_barabasi");
  revise("FAIRify_phenotype_annotation_v02", "Execute_FAIRifier_process_to_phenotype_annotation");
  for (std::string name :
       {"Prepare_gold_standard_drug_indications_v02", "Prepare_mesh_annotation_v02",
        "Inspect_input_data_files_head_v02", "Feature_generation_v02",
        "Compute_drug_similarity_v02", "Compute_disease_similarity_v02",
        "Model_training_and_evaluation_v02"}) {
    r.instruction(name, python(), "0.2");
  }
  r.instructions.at(op("Plan_Inspect_input_data_files_head_v02")).description =
      "Print the first rows of each input data file with head()";

  // Datasets and the usages that bind their distributions to variables.
  for (const DatasetSpec& d : dataset_specs()) {
    workflow::Distribution dist;
    dist.iri = op("Distribution_" + d.distribution);
    dist.label = d.file_label;
    dist.download_urls = {Term::literal(d.url)};
    dist.media_type = iri(d.format);
    workflow::DatasetRecord ds;
    ds.iri = op("Dataset_" + d.key);
    ds.label = spaced(d.key);
    ds.description = d.description;
    ds.license = Term::iri(d.license);
    ds.distributions = {dist.iri};
    const Term online = variable(d.key + "_online");
    if (d.key == "human_interactome_barabasi" || d.key == "phenotype_annotation") {
      r.usage("Download_" + d.key, "Fetch_download_" + d.key + "_to_variable",
              "Link variable to download " + spaced(d.key), {dist.iri, online});
      r.usage("FAIRify_" + d.key + "_v02", "FAIRify_" + d.key + "_v02",
              "Link variable to FAIRify " + spaced(d.key), {dist.iri, online});
    } else if (d.key == "gold_standard_drug_indications" || d.key == "mesh_annotation") {
      r.usage("Prepare_" + d.key + "_v02", "Prepare_" + d.key + "_v02",
              "Link variable to prepare " + spaced(d.key), {dist.iri, online});
    } else {
      r.usage("Download_" + d.key, "Fetch_download_" + d.key + "_to_variable",
              "Link variable to download " + spaced(d.key), {dist.iri, online});
    }
    r.distributions.emplace(dist.iri, std::move(dist));
    r.datasets.emplace(ds.iri, std::move(ds));
  }

  // SPARQL queries run against the local triplestore, each constrained by a
  // SHACL node shape.
  const std::map<std::string, std::string> bodies = {
      {"drug_smiles", "?drug a db:Drug . ?drug db:calculated-properties ?p . "
                      "?p a db:SMILES . ?p db:value ?smiles"},
      {"drug_targets", "?drug a db:Drug . ?drug db:target ?target"},
      {"drug_target_sequences", "?drug db:target ?target . ?target db:amino-acid-sequence ?seq"},
      {"drug_side_effects", "?drug a db:Drug . ?drug db:x-pubchemcompound ?cid . "
                            "?effect sider:stitch-flat-compound-id ?cid . ?effect sider:side-effect ?se"},
      {"drug_go_annotations", "?drug db:target ?target . ?target db:x-uniprot ?protein . "
                              "?protein db:go-process ?go"}};
  const std::map<std::string, std::string> projections = {
      {"drug_smiles", "?drug ?smiles"},          {"drug_targets", "?drug ?target"},
      {"drug_target_sequences", "?target ?seq"}, {"drug_side_effects", "?drug ?se"},
      {"drug_go_annotations", "?drug ?go"}};
  for (const std::string& q : kSparqlQueries) {
    r.usage("Execute_SPARQL_query_" + q, "Query_" + q, "Query the triplestore for " + spaced(q),
            {variable("Triplestore_endpoint_for_input_data"), op("Triplestore_GraphDB")});
    workflow::QueryShape shape;
    shape.iri = op("NodeShape_" + q);
    shape.constraint = op("SPARQLConstraint_" + q);
    shape.sparql =
        "PREFIX db: <http://bio2rdf.org/drugbank_vocabulary:>\n"
        "PREFIX sider: <http://bio2rdf.org/sider_vocabulary:>\n"
        "SELECT DISTINCT " + projections.at(q) + " WHERE { " + bodies.at(q) + " }";
    shape.target_usage = op("Usage_Query_" + q);
    r.shapes.emplace(shape.iri, std::move(shape));
  }

  // Remzi created, developed and executes every instruction; Ahmed developed
  // the feature-generation code; Joao executes both protocol versions.
  std::set<Term> all;
  std::set<Term> features;
  for (const auto& [iri, ins] : r.instructions) {
    all.insert(iri);
    const std::string& s = iri.value();
    if (s.find("Feature_generation") != std::string::npos ||
        s.find("similarity") != std::string::npos) {
      features.insert(iri);
    }
  }
  const std::set<Term> protocols = {iri(kMainProtocolV01), iri(kMainProtocolV02)};
  auto associate = [&](const std::string& name, std::string_view agent, std::string_view role,
                       const std::set<Term>& plans) {
    r.associations.emplace(op("Association_" + name),
                           workflow::AgentAssociation{op("Association_" + name), iri(agent),
                                                      iri(role), plans});
  };
  associate("Remzi_as_creator", kAgentRemzi, kRoleCreator, all);
  associate("Remzi_as_developer", kAgentRemzi, kRoleDeveloper, all);
  associate("Remzi_as_executor", kAgentRemzi, kRoleExecutor, all);
  associate("Remzi_as_publisher", kAgentRemzi, kRolePublisher, protocols);
  associate("Ahmed_as_developer", kAgentAhmed, kRoleDeveloper, features);
  associate("Joao_as_executor", kAgentJoao, kRoleExecutor, protocols);
  return r;
}

workflow::WorkflowDef head(std::string_view wf, const std::string& version,
                           const std::string& created, const std::string& modified,
                           const std::string& first_step) {
  workflow::WorkflowDef d;
  d.iri = iri(wf);
  d.version = version;
  d.created = created;
  d.modified = modified;
  d.creator = iri(kAgentRemzi);
  d.attributed_to = iri(kAgentRemzi);
  d.first_step = op("Step_" + first_step);
  d.label = "Main Protocol v." + version;
  d.description = "OpenPREDICT Main Protocol v." + version;
  d.language = english();
  d.license = Term::iri("https://opensource.org/licenses/MIT");
  return d;
}

WorkflowModel build_v01(const Registry& r) {
  ModelBuilder b(r, head(kMainProtocolV01, "0.1", "2018-11-27", "2019-05-15",
                         "Prepare_Input_Data_Files"));
  const std::string feature_nb = "Feature_generation_Pipeline_OpenPREDICT_ipynb";
  const std::string model_nb =
      "Model_preparation_train_and_evaluation_Workflow_OpenPREDCIT_-_ML_ipynb";
  std::vector<StepSpec> steps = {
      {"Prepare_Input_Data_Files", kManual, "Prepare_Input_Data_Files", {},
       {"Input_data_files"}, {feature_nb}, true},
      {feature_nb, kScript, feature_nb, {"Input_data_files"}, {"Feature_files"}, {model_nb}},
      {model_nb, kScript, model_nb, {"Feature_files"}, {"Model_evaluation_results"},
       {"Format_results_for_presentation"}},
      {"Format_results_for_presentation", kManual, "Format_results_for_presentation",
       {"Model_evaluation_results"}, {"Presentation_results"}, {}},
      {"Install_GraphDB_triplestore", kManual, "Install_GraphDB_triplestore", {},
       {"GraphDB_installation"}, {"Start_GraphDB_triplestore"}, true},
      {"Start_GraphDB_triplestore", kManual, "Start_GraphDB_triplestore",
       {"GraphDB_installation"}, {"GraphDB_server"}, {"Create_repository_in_triplestore"}, true},
      {"Create_repository_in_triplestore", kManual, "Create_repository_in_triplestore",
       {"GraphDB_server"}, {"Triplestore_repository"}, {"Save_files_in_triplestore"}, true},
  };
  StepSpec save_all{"Save_files_in_triplestore", kManual, "Save_files_in_triplestore",
                    {"Triplestore_repository"}, {"Triplestore_endpoint_for_input_data"}, {}, true};
  for (const DatasetSpec& d : dataset_specs()) {
    const std::string& k = d.key;
    if (k == "gold_standard_drug_indications" || k == "mesh_annotation") continue;
    steps.push_back({"Download_" + k, kManual, "Download_" + k, {}, {k + "_online"},
                     {"Save_" + k}, true});
    if (d.format == v::edam::kFormat3256) {
      steps.push_back({"Save_" + k, kManual, "Save_" + k, {k + "_online"}, {k + "_local_file"},
                       {"Decompress_" + k}, true});
      steps.push_back({"Decompress_" + k, kManual, "Decompress_" + k, {k + "_local_file"},
                       {k + "_rdf_file"}, {"Save_files_in_triplestore"}, true});
      save_all.inputs.push_back(k + "_rdf_file");
    } else if (k == "Drugbank_dataset") {
      steps.push_back({"Save_" + k, kManual, "Save_" + k, {k + "_online"}, {k + "_local_file"},
                       {"Save_files_in_triplestore"}, true});
      save_all.inputs.push_back(k + "_local_file");
    } else {
      const std::string fairifier = "Execute_FAIRifier_process_to_" + k;
      steps.push_back({"Save_" + k, kManual, "Save_" + k, {k + "_online"}, {k + "_local_file"},
                       {"Clean_" + k}, true});
      steps.push_back({"Clean_" + k, kManual, "Clean_" + k, {k + "_local_file"}, {},
                       {fairifier}, true});
      steps.push_back({fairifier, kManual, fairifier, {k + "_local_file"}, {k + "_rdf_file"},
                       {"Save_files_in_triplestore"}, true});
      save_all.inputs.push_back(k + "_rdf_file");
      // The FAIRifier instruction is itself a plan of nine guideline steps.
      for (std::size_t i = 0; i < kFairSteps.size(); ++i) {
        const auto& [topic, shared] = kFairSteps[i];
        char num[8];
        std::snprintf(num, sizeof num, "%02zu", i + 1);
        StepSpec sub{"FAIRify_" + k + "_" + num + "_" + topic, kManual,
                     shared ? "FAIRification_" + topic : "FAIRify_" + k + "_" + topic};
        if (i + 1 < kFairSteps.size()) {
          char next[8];
          std::snprintf(next, sizeof next, "%02zu", i + 2);
          sub.precedes = {"FAIRify_" + k + "_" + next + "_" + kFairSteps[i + 1].first};
        }
        b.add(sub, op("Plan_" + fairifier));
      }
    }
  }
  // GraphDB is restarted after the bulk import, following the same
  // instruction as the first start.
  save_all.precedes.push_back("Restart_GraphDB_triplestore");
  StepSpec restart{"Restart_GraphDB_triplestore", kManual, "Start_GraphDB_triplestore",
                   {"Triplestore_endpoint_for_input_data"}, {}, {}, true};
  for (const std::string& q : kSparqlQueries) {
    restart.precedes.push_back("Execute_SPARQL_query_" + q);
    steps.push_back({"Execute_SPARQL_query_" + q, kManual, "Execute_SPARQL_query_" + q,
                     {"Triplestore_endpoint_for_input_data"}, {q + "_results"}, {}, true});
  }
  steps.push_back(restart);
  steps.push_back(save_all);
  for (std::size_t i = 0; i < kFeatureCells.size(); ++i) {
    StepSpec cell{cell_name(i), kScript, cell_name(i)};
    cell.inputs = {i < 5 ? std::string("Triplestore_endpoint_for_input_data")
                         : kFeatureCells[kSimilarityInput[i - 5]].first};
    cell.outputs = {kFeatureCells[i].first};
    cell.precedes = {i + 1 < kFeatureCells.size() ? cell_name(i + 1)
                                                 : "Model_preparation_train_and_evaluation"};
    steps.push_back(cell);
  }
  StepSpec model{"Model_preparation_train_and_evaluation", kScript,
                 "Model_preparation_train_and_evaluation"};
  for (std::size_t i = 5; i < kFeatureCells.size(); ++i) {
    model.inputs.push_back(kFeatureCells[i].first);
  }
  model.outputs = {"Model_evaluation_results"};
  steps.push_back(model);
  b.add_all(steps);
  return b.finish();
}

WorkflowModel build_v02(const Registry& r) {
  auto h = head(kMainProtocolV02, "0.2", "2019-05-15", "2019-07-03",
                "Prepare_Input_Data_Files_v02");
  h.revision_of = iri(kMainProtocolV01);
  ModelBuilder b(r, std::move(h));
  std::vector<StepSpec> steps = {
      {"Prepare_Input_Data_Files_v02", kScript, "Prepare_Input_Data_Files_v02", {},
       {"Input_data_files"}, {"Feature_generation_v02"}, true},
      {"Inspect_input_data_files_v02", kManual, "Inspect_input_data_files_head_v02",
       {"Input_data_files"}, {}, {}},
      {"Feature_generation_v02", kScript, "Feature_generation_v02",
       {"drug_similarity_csv", "disease_similarity_csv", "gold_standard_drug_indications_tsv"},
       {"Feature_files"}, {"Model_training_and_evaluation_v02"}},
      {"Model_training_and_evaluation_v02", kScript, "Model_training_and_evaluation_v02",
       {"Feature_files"}, {"Model_evaluation_results"}, {"Format_results_for_presentation_v02"}},
      {"Format_results_for_presentation_v02", kManual, "Format_results_for_presentation",
       {"Model_evaluation_results"}, {"Presentation_results"}, {}},
      {"Compute_drug_similarity_v02", kScript, "Compute_drug_similarity_v02",
       {"Triplestore_endpoint_for_input_data"}, {"drug_similarity_csv"},
       {"Feature_generation_v02"}},
      {"Compute_disease_similarity_v02", kScript, "Compute_disease_similarity_v02",
       {"mesh_annotation_tsv"}, {"disease_similarity_csv"}, {"Feature_generation_v02"}},
  };
  StepSpec save_all{"Save_files_in_triplestore_v02", kManual, "Save_files_in_triplestore",
                    {}, {"Triplestore_endpoint_for_input_data"}, {"Compute_drug_similarity_v02"},
                    true};
  for (const DatasetSpec& d : dataset_specs()) {
    const std::string& k = d.key;
    if (k == "gold_standard_drug_indications" || k == "mesh_annotation") {
      const std::string tsv = k == "mesh_annotation" ? "mesh_annotation_tsv"
                                                     : "gold_standard_drug_indications_tsv";
      steps.push_back({"Prepare_" + k + "_v02", kScript, "Prepare_" + k + "_v02",
                       {k + "_online"}, {tsv},
                       {k == "mesh_annotation" ? "Compute_disease_similarity_v02"
                                               : "Feature_generation_v02"},
                       true});
    } else if (k == "human_interactome_barabasi" || k == "phenotype_annotation") {
      steps.push_back({"FAIRify_" + k + "_v02", kScript, "FAIRify_" + k + "_v02",
                       {k + "_online"}, {k + "_rdf_file"}, {"Save_files_in_triplestore_v02"},
                       true});
      save_all.inputs.push_back(k + "_rdf_file");
    } else {
      steps.push_back({"Download_" + k + "_v02", kManual, "Download_" + k, {}, {k + "_online"},
                       {"Save_" + k + "_v02"}, true});
      steps.push_back({"Save_" + k + "_v02", kManual, "Save_" + k, {k + "_online"},
                       {k + "_local_file"}, {"Save_files_in_triplestore_v02"}, true});
      save_all.inputs.push_back(k + "_local_file");
    }
  }
  steps.push_back(save_all);
  b.add_all(steps);
  return b.finish();
}

struct Execution {
  std::string step;
  std::int64_t epoch;
  std::vector<std::pair<std::string, std::string>> artifacts;  // name, value
  std::vector<std::pair<std::string_view, std::string>> evaluations;  // measure, value
  std::string generated_at;  // empty: 95 s after the start
};

void record_executions(trace::Tracer& tracer) {
  std::vector<Execution> runs;
  // v0.1: feature cells 5-11 and one model run.
  for (std::size_t i = 4; i < kFeatureCells.size(); ++i) {
    runs.push_back({"Step_" + cell_name(i), 1546297800 + 300 * static_cast<std::int64_t>(i - 4),
                    {{kFeatureCells[i].first, kFeatureCells[i].second}}, {}, ""});
  }
  runs.push_back({"Step_Model_preparation_train_and_evaluation", 1546302862, {},
                  {{kMeasureAccuracy, "0.833336"},
                   {kMeasureAveragePrecision, "0.820571"},
                   {kMeasureF1, "0.829412"},
                   {kMeasurePrecision, "0.848837"},
                   {kMeasureRecall, "0.810850"},
                   {kMeasureRocAuc, "0.830874"}},
                  "2019-01-01T00:02:31.011"});
  // v0.2: data preparation, features and one model run.
  runs.push_back({"Step_Prepare_gold_standard_drug_indications_v02", 1562140800,
                  {{"gold_standard_drug_indications_tsv", "gold-standard-drug-indications.tsv"}},
                  {}, ""});
  runs.push_back({"Step_Prepare_mesh_annotation_v02", 1562141400,
                  {{"mesh_annotation_tsv", "mim2mesh.tsv"}}, {}, ""});
  runs.push_back({"Step_Compute_drug_similarity_v02", 1562142000,
                  {{"drug_similarity_csv", "drugs-similarity.csv"}}, {}, ""});
  runs.push_back({"Step_Compute_disease_similarity_v02", 1562142600,
                  {{"disease_similarity_csv", "diseases-similarity.csv"}}, {}, ""});
  runs.push_back({"Step_Feature_generation_v02", 1562143200,
                  {{"Feature_files", "features.csv"}}, {}, ""});
  runs.push_back({"Step_Model_training_and_evaluation_v02", 1562143800, {},
                  {{kMeasureAccuracy, "0.851852"},
                   {kMeasureAveragePrecision, "0.846311"},
                   {kMeasureF1, "0.853503"},
                   {kMeasurePrecision, "0.843750"},
                   {kMeasureRecall, "0.863492"},
                   {kMeasureRocAuc, "0.850397"}},
                  ""});

  for (const Execution& run : runs) {
    const auto start = trace::Timestamp::from_epoch_seconds(run.epoch);
    const auto at = run.generated_at.empty()
                        ? trace::Timestamp::from_epoch_ms(run.epoch * 1000 + 95'000)
                        : trace::Timestamp::parse(run.generated_at);
    Term a = tracer.begin_activity(op(run.step), iri(kAgentJoao), iri(kRoleExecutor), start);
    tracer.associate(a, iri(kAgentJupyter), iri(kRoleExecutionEnvironment));
    for (const auto& [name, value] : run.artifacts) tracer.record_artifact(a, name, value, at);
    for (const auto& [measure, value] : run.evaluations) {
      tracer.record_evaluation(a, iri(measure), value, at);
    }
  }
}

void add_context(Graph& g) {
  const Term type = iri(v::rdf::kType);
  const Term label = iri(v::rdfs::kLabel);
  for (auto [agent, name] : {std::pair{kAgentRemzi, "Remzi"}, std::pair{kAgentAhmed, "Ahmed"},
                             std::pair{kAgentJoao, "Joao"}}) {
    g.insert(iri(agent), type, iri(v::prov::kPerson));
    g.insert(iri(agent), label, Term::literal(name));
  }
  g.insert(iri(kAgentJupyter), type, iri(v::prov::kSoftwareAgent));
  g.insert(iri(kAgentJupyter), label, Term::literal("Jupyter Notebook"));
  for (std::string_view role : {kRoleCreator, kRoleDeveloper, kRoleExecutor, kRolePublisher,
                                kRoleExecutionEnvironment}) {
    g.insert(iri(role), type, iri(v::prov::kRole));
    std::string local(role.substr(role.rfind('_') + 1));
    g.insert(iri(role), label, Term::literal(local == "environment" ? "Execution environment" : local));
  }
  g.insert(english(), type, iri(v::dc::kLinguisticSystem));
  g.insert(english(), label, Term::literal("English"));
  g.insert(python(), type, iri(v::schema::kComputerLanguage));
  g.insert(python(), label, Term::literal("Python 3.5"));
  g.insert(python(), iri(v::dc::kHasVersion), Term::literal("3.5"));
  for (std::string_view m : {kMeasureAccuracy, kMeasureAveragePrecision, kMeasureF1,
                             kMeasurePrecision, kMeasureRecall, kMeasureRocAuc}) {
    g.insert(iri(m), type, iri(v::mls::kEvaluationMeasure));
    g.insert(iri(m), label, Term::literal(spaced(std::string(m.substr(m.rfind("Measure_") + 8)))));
  }
  g.insert(op("Triplestore_GraphDB"), type, iri(v::fabio::kTriplestore));
  g.insert(op("Triplestore_GraphDB"), label, Term::literal("GraphDB triplestore"));
}

void merge_into(Graph& dst, const Graph& src) {
  for (const rdf::Triple& t : src.triples()) dst.insert(t.subject, t.predicate, t.object);
}

}  // namespace

Graph generate_fixture() {
  const Registry registry = build_registry();
  Graph g = workflow::emit_triples(build_v01(registry));
  merge_into(g, workflow::emit_triples(build_v02(registry)));
  add_context(g);
  trace::Tracer tracer(g);
  record_executions(tracer);
  merge_into(g, trace::emit_trace(tracer.trace()));
  return g;
}

std::string fixture_ntriples() { return rdf::serialize_ntriples(generate_fixture()); }

}  // namespace plexflow::fixture
