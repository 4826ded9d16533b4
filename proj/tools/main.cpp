// presabs: presence/absence reasoning over ontology-annotated phenotypes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "presabs/fixtures.hpp"
#include "presabs/fuzz.hpp"
#include "presabs/matrix.hpp"
#include "presabs/syntax.hpp"

namespace fs = std::filesystem;
using namespace presabs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;      // IO, parse, validation
constexpr int kExitReasoning = 2;  // complement reached the EL engine
constexpr int kExitDiff = 3;       // oracle comparison found a difference

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

Iri parse_vocab_iri(const std::string& text) {
  if (!text.empty() && text.front() == '<' && text.back() == '>')
    return Iri{text.substr(1, text.size() - 2)};
  if (text.find("://") != std::string::npos || text.rfind("urn:", 0) == 0) return Iri{text};
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const auto& builtin = builtin_prefixes();
    if (auto it = builtin.find(text.substr(0, colon)); it != builtin.end())
      return Iri{it->second + text.substr(colon + 1)};
  }
  throw std::runtime_error("cannot resolve vocabulary IRI '" + text + "'");
}

struct VocabConfig {
  std::vector<std::string> overrides;  // slot=iri
  std::string config_path;

  void apply_slot(Vocabulary& v, const std::string& slot, const std::string& value) const {
    static const std::map<std::string, Iri Vocabulary::*> slots = {
        {"inheres_in", &Vocabulary::inheres_in},
        {"towards", &Vocabulary::towards},
        {"implies_presence_of", &Vocabulary::implies_presence_of},
        {"part_of", &Vocabulary::part_of},
        {"has_part", &Vocabulary::has_part},
        {"develops_from", &Vocabulary::develops_from},
        {"lacks_all_parts_of_type", &Vocabulary::lacks_all_parts_of_type},
        {"quality_absent", &Vocabulary::quality_absent},
        {"quality_present", &Vocabulary::quality_present},
        {"negates", &Vocabulary::negates},
        {"anatomy_root", &Vocabulary::anatomy_root},
    };
    if (slot == "mint_namespace") {
      v.mint_namespace = parse_vocab_iri(value).value;
      return;
    }
    if (slot == "absence_body") {
      v.absence_body = parse_vocab_iri(value);
      return;
    }
    auto it = slots.find(slot);
    if (it == slots.end()) throw std::runtime_error("unknown vocabulary slot '" + slot + "'");
    v.*(it->second) = parse_vocab_iri(value);
  }

  Vocabulary build() const {
    Vocabulary v = Vocabulary::defaults();
    if (!config_path.empty()) {
      std::istringstream in(read_file(config_path));
      std::string line;
      int lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto colon = line.find(':');
        auto trim = [](std::string s) {
          s.erase(0, s.find_first_not_of(" \t\r"));
          const auto end = s.find_last_not_of(" \t\r");
          s.erase(end == std::string::npos ? 0 : end + 1);
          return s;
        };
        if (trim(line).empty()) continue;
        if (colon == std::string::npos)
          throw std::runtime_error(config_path + ":" + std::to_string(lineno) +
                                   ": expected 'slot: IRI'");
        apply_slot(v, trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
      }
    }
    for (const std::string& entry : overrides) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("--set expects slot=IRI, got '" + entry + "'");
      apply_slot(v, entry.substr(0, eq), entry.substr(eq + 1));
    }
    v.validate();
    return v;
  }
};

void add_vocab_options(CLI::App* cmd, VocabConfig& cfg) {
  cmd->add_option("--set", cfg.overrides,
                  "Override a vocabulary slot, e.g. --set anatomy_root=uberon:anatomical_structure");
  cmd->add_option("--config", cfg.config_path, "Vocabulary config file ('slot: IRI' lines)");
}

Ontology load_ontology(const std::string& path) {
  std::vector<std::string> warnings;
  Ontology o = parse_ontology(read_file(path), nullptr, &warnings);
  for (const std::string& w : warnings) std::cerr << path << ": warning: " << w << "\n";
  return o;
}

std::string hierarchy_document(const el::ClassHierarchy& h, const PrefixMap& prefixes,
                               const std::optional<Iri>& source) {
  Ontology out;
  if (source) out.iri = Iri{source->value + "/hierarchy"};
  out.prefixes = prefixes;
  out.axioms = h.to_axioms();
  return serialize_ontology(out);
}

int cmd_classify(const std::string& in_path, const std::string& out_path) {
  const Ontology o = load_ontology(in_path);
  const el::Classification c = el::classify(o);
  for (const std::string& w : c.warnings) std::cerr << "warning: " << w << "\n";
  const std::string doc = hierarchy_document(c.hierarchy, o.prefixes, o.iri);
  if (out_path.empty() || out_path == "-")
    std::cout << doc;
  else
    write_file(out_path, doc);
  return kExitOk;
}

int cmd_pipeline(const std::string& anatomy_path, const std::string& phenotypes_path,
                 const std::string& out_path, const std::string& hierarchy_path,
                 const std::string& report_path, const std::string& complement_path, bool fixpoint,
                 bool exclude_root, const VocabConfig& vocab_cfg) {
  const Vocabulary v = vocab_cfg.build();
  const Ontology anatomy = load_ontology(anatomy_path);
  std::vector<Axiom> phenotype_axioms;
  PrefixMap prefixes = anatomy.prefixes;
  if (!phenotypes_path.empty()) {
    const Ontology phenotypes = load_ontology(phenotypes_path);
    phenotype_axioms = phenotypes.axioms;
    for (const auto& [prefix, ns] : phenotypes.prefixes) prefixes.emplace(prefix, ns);
  }
  pipeline::PipelineOptions opts;
  opts.fixpoint = fixpoint;
  opts.include_root = !exclude_root;
  const pipeline::PipelineResult result = pipeline::run(anatomy, phenotype_axioms, v, opts);
  for (const std::string& w : result.report.warnings) std::cerr << "warning: " << w << "\n";
  for (const std::string& u : result.report.unsatisfiable)
    std::cerr << "unsatisfiable: " << u << "\n";
  if (!out_path.empty()) write_file(out_path, serialize_ontology(result.enriched));
  if (!hierarchy_path.empty())
    write_file(hierarchy_path,
               hierarchy_document(result.final.hierarchy, result.enriched.prefixes, anatomy.iri));
  if (!report_path.empty()) {
    const bool json = report_path.size() > 5 && report_path.ends_with(".json");
    write_file(report_path, json ? result.report.to_json() : result.report.to_text());
  }
  if (!complement_path.empty()) {
    Ontology doc;
    doc.iri = Iri{"http://purl.org/presabs/gen/complement-debug"};
    doc.prefixes = result.enriched.prefixes;
    doc.axioms = pipeline::complement_documentation_axioms(result.names, v);
    write_file(complement_path, serialize_ontology(doc));
  }
  return kExitOk;
}

int cmd_infer_matrix(const std::string& anatomy_path, const std::string& matrix_path,
                     const std::string& out_path, const std::string& stats_path,
                     const std::string& report_path, bool allow_polymorphic, bool fixpoint,
                     bool exclude_root, const VocabConfig& vocab_cfg) {
  const Vocabulary v = vocab_cfg.build();
  const Ontology anatomy = load_ontology(anatomy_path);
  matrix::LoadOptions load_opts;
  load_opts.allow_polymorphic = allow_polymorphic;
  const matrix::CharacterMatrix m = matrix::load_matrix(read_file(matrix_path), load_opts);
  matrix::InferOptions opts;
  opts.pipeline.fixpoint = fixpoint;
  opts.pipeline.include_root = !exclude_root;
  const matrix::InferResult result = matrix::infer(m, anatomy, v, opts);
  for (const std::string& w : result.report.warnings) std::cerr << "warning: " << w << "\n";
  if (out_path.empty() || out_path == "-")
    std::cout << matrix::to_csv(result.matrix);
  else if (out_path.ends_with(".json"))
    write_file(out_path, matrix::to_json(result.matrix));
  else
    write_file(out_path, matrix::to_csv(result.matrix));
  if (!stats_path.empty()) write_file(stats_path, matrix::stats(result.matrix).to_json());
  if (!report_path.empty()) {
    const bool json = report_path.ends_with(".json");
    write_file(report_path, json ? result.report.to_json() : result.report.to_text());
  }
  return kExitOk;
}

int cmd_fuzz(uint64_t seeds, bool fixpoint) {
  int status = kExitOk;
  const auto report = [&](const char* what, const fuzz::RunResult& r) {
    std::cerr << what << ": " << r.seeds_run << " seeds, " << r.failures.size() << " failure(s)\n";
    for (const fuzz::SeedFailure& f : r.failures)
      std::cerr << "  seed " << f.seed << ": " << f.detail << "\n";
    if (!r.ok()) status = kExitDiff;
  };
  report("classification vs oracle", fuzz::compare_classification(1, seeds));
  report("inversion vs oracle", fuzz::compare_inversion(1, seeds, fixpoint));
  report("matrix inference vs oracle", fuzz::compare_matrix(1, seeds));
  report("serialization round-trip", fuzz::check_roundtrip(1, seeds));
  return status;
}

int cmd_demo(const std::string& dir) {
  const fs::path out(dir);
  fs::create_directories(out);
  const Vocabulary v = Vocabulary::defaults();
  write_file(out / "demo_anatomy.ofn", fixtures::demo_anatomy_text());
  write_file(out / "demo_phenotypes.ofn", serialize_ontology(fixtures::demo_phenotypes(v)));
  write_file(out / "toy_matrix.json", fixtures::toy_matrix_text());
  std::cout << (out / "demo_anatomy.ofn").string() << "\n"
            << (out / "demo_phenotypes.ofn").string() << "\n"
            << (out / "toy_matrix.json").string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presabs: taxon-specific presence/absence inference for anatomical phenotypes"};
  app.require_subcommand(1);

  VocabConfig vocab_cfg;
  std::string in_path, out_path, anatomy_path, phenotypes_path, hierarchy_path, report_path;
  std::string matrix_path, stats_path, demo_dir, complement_path;
  bool fixpoint = false, exclude_root = false, allow_polymorphic = false;
  uint64_t seeds = 100;

  CLI::App* classify = app.add_subcommand("classify", "Classify an ontology; emit the direct hierarchy");
  classify->add_option("--in", in_path, "Ontology file")->required();
  classify->add_option("--out", out_path, "Hierarchy output file ('-' for stdout)");

  CLI::App* pipeline_cmd =
      app.add_subcommand("pipeline", "Run the presence/absence axiom generation and classification");
  pipeline_cmd->add_option("--anatomy", anatomy_path, "Anatomy ontology file")->required();
  pipeline_cmd->add_option("--phenotypes", phenotypes_path, "Phenotype class definitions file");
  pipeline_cmd->add_option("--out", out_path, "Enriched ontology output file");
  pipeline_cmd->add_option("--hierarchy", hierarchy_path, "Final hierarchy output file");
  pipeline_cmd->add_option("--report", report_path, "Report file (.json for JSON, else key: value)");
  pipeline_cmd->add_option("--emit-complement", complement_path,
                           "Write the debug complement-semantics axioms to this file");
  pipeline_cmd->add_flag("--fixpoint", fixpoint, "Iterate inversion passes until stable");
  pipeline_cmd->add_flag("--exclude-root", exclude_root, "Drop the anatomy root from the entity set");
  add_vocab_options(pipeline_cmd, vocab_cfg);

  CLI::App* infer = app.add_subcommand("infer-matrix", "Infer a presence/absence matrix");
  infer->add_option("--anatomy", anatomy_path, "Anatomy ontology file")->required();
  infer->add_option("--matrix", matrix_path, "Character matrix JSON file")->required();
  infer->add_option("--out", out_path, "Matrix output (.json for JSON, else CSV; '-' for stdout)");
  infer->add_option("--stats", stats_path, "Statistics JSON output file");
  infer->add_option("--report", report_path, "Pipeline report output file");
  infer->add_flag("--allow-polymorphic", allow_polymorphic,
                  "Accept several states per (taxon, character)");
  infer->add_flag("--fixpoint", fixpoint, "Iterate inversion passes until stable");
  infer->add_flag("--exclude-root", exclude_root, "Drop the anatomy root from the entity set");
  add_vocab_options(infer, vocab_cfg);

  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "Compare engine and oracle over random ontologies");
  fuzz_cmd->add_option("--seeds", seeds, "Number of seeds per comparison");
  fuzz_cmd->add_flag("--fixpoint", fixpoint, "Run the pipeline comparisons in fixpoint mode");

  CLI::App* demo = app.add_subcommand("demo", "Write the bundled demo files");
  demo->add_option("--dir", demo_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(in_path, out_path);
    if (pipeline_cmd->parsed())
      return cmd_pipeline(anatomy_path, phenotypes_path, out_path, hierarchy_path, report_path,
                          complement_path, fixpoint, exclude_root, vocab_cfg);
    if (infer->parsed())
      return cmd_infer_matrix(anatomy_path, matrix_path, out_path, stats_path, report_path,
                              allow_polymorphic, fixpoint, exclude_root, vocab_cfg);
    if (fuzz_cmd->parsed()) return cmd_fuzz(seeds, fixpoint);
    if (demo->parsed()) return cmd_demo(demo_dir);
  } catch (const ComplementNotSupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitReasoning;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
