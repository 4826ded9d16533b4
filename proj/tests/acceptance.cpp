// Acceptance suite. Runs every gate criterion and prints one PASS/FAIL
// line per check; exits nonzero if anything fails. argv[1] is the path to
// the presabs CLI binary (used by the determinism checks).

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "presabs/fixtures.hpp"
#include "presabs/fuzz.hpp"
#include "presabs/matrix.hpp"
#include "presabs/oracle.hpp"
#include "presabs/syntax.hpp"

namespace fs = std::filesystem;
using namespace presabs;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string cli_path;
fs::path work;

int run_cli(const std::string& args) {
  const std::string cmd = cli_path + " " + args + " 2>>" + (work / "cli_stderr.log").string();
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Source-order rendering (no canonicalization), so axiom shuffles survive
// into the file the determinism checks feed back in.
std::string render_in_source_order(const Ontology& o) {
  std::ostringstream out;
  for (const auto& [prefix, ns] : o.prefixes) out << "Prefix(" << prefix << ":=<" << ns << ">)\n";
  out << "Ontology(";
  if (o.iri) out << "<" << o.iri->value << ">";
  out << "\n";
  for (const Axiom& ax : o.axioms) out << render_axiom(ax, o.prefixes) << "\n";
  out << ")\n";
  return out.str();
}

size_t peak_rss_kb() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line))
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream fields(line.substr(6));
      size_t kb = 0;
      fields >> kb;
      return kb;
    }
  return 0;
}

const Vocabulary& vocab() {
  static const Vocabulary v = Vocabulary::defaults();
  return v;
}

Iri gen(const std::string& tag, const char* local) {
  return eq::mint(vocab(), tag, fixtures::demo_class(local));
}

void criterion_1_demo_entailments() {
  const auto start = Clock::now();
  write_file(work / "demo_anatomy.ofn", fixtures::demo_anatomy_text());
  write_file(work / "demo_phenotypes.ofn", serialize_ontology(fixtures::demo_phenotypes(vocab())));
  const int exit_code =
      run_cli("pipeline --anatomy " + (work / "demo_anatomy.ofn").string() + " --phenotypes " +
              (work / "demo_phenotypes.ofn").string() + " --out " +
              (work / "enriched.ofn").string() + " --hierarchy " + (work / "hier.ofn").string() +
              " --report " + (work / "report.json").string());
  report("criterion 1: cli pipeline on the demo exits 0", exit_code == 0);

  // The enriched output reclassifies to exactly the pipeline's final state.
  const Ontology enriched = parse_ontology(read_file(work / "enriched.ofn"));
  const el::Classification c = el::classify(enriched);
  const auto sub = [&](const Iri& a, const Iri& b) { return c.subsumptions.is_subsumed_by(a, b); };
  const auto absent = [&](const char* l) { return gen("absent", l); };
  const auto presence = [&](const char* l) { return gen("presence_of", l); };

  report("criterion 1a: absent(fin) <= absent(dorsal_fin) and absent(pectoral_fin)",
         sub(absent("fin"), absent("dorsal_fin")) && sub(absent("fin"), absent("pectoral_fin")));

  const Iri shape_phen = eq::mint_phenotype(
      vocab(), {fixtures::demo_class("dorsal_fin"), fixtures::demo_quality("oblong"), {}});
  report("criterion 1b: phenotype(dorsal_fin, shape) <= presence_of(fin)",
         sub(shape_phen, presence("fin")));

  const Iri humerus_phen = eq::mint_phenotype(
      vocab(), {fixtures::demo_class("humerus"), fixtures::demo_quality("round"), {}});
  report("criterion 1c: phenotype(humerus, Q) <= presence_of(forelimb/limb/limb_bud)",
         sub(humerus_phen, presence("forelimb")) && sub(humerus_phen, presence("limb")) &&
             sub(humerus_phen, presence("limb_bud")));

  report("criterion 1d: absent(limb_bud) <= absent(limb)",
         sub(absent("limb_bud"), absent("limb")));
  report("criterion 1e: absent(forelimb) <= absent(humerus)",
         sub(absent("forelimb"), absent("humerus")));

  bool no_crosstalk = true;
  for (const Iri& entity : pipeline::anatomy_classes(fixtures::demo_anatomy(), vocab()))
    no_crosstalk = no_crosstalk && !sub(eq::mint(vocab(), "absent", entity),
                                        eq::mint(vocab(), "presence_of", entity));
  report("criterion 1f: absent(E) is never below presence_of(E)", no_crosstalk);

  const Iri contact_phen = eq::mint_phenotype(
      vocab(), {fixtures::demo_class("internal_trochanter"),
                fixtures::demo_quality("in_contact_with"), fixtures::demo_class("diaphysis_of_femur")});
  report("criterion 1g: relational phenotype reaches both presence query classes",
         sub(contact_phen, presence("internal_trochanter")) &&
             sub(contact_phen, presence("diaphysis_of_femur")));

  const double elapsed = seconds_since(start);
  report("criterion 1 runtime < 1 s", elapsed < 1.0, std::to_string(elapsed) + " s");
}

void criterion_2_oracle_equivalence() {
  const auto start = Clock::now();
  const fuzz::RunResult r = fuzz::compare_classification(1, 200);
  const double elapsed = seconds_since(start);
  report("criterion 2: engine equals oracle on 200 random ontologies",
         r.ok() && r.seeds_run == 200,
         r.ok() ? std::to_string(elapsed) + " s" : r.failures.front().detail);
  report("criterion 2 runtime < 10 s", elapsed < 10.0, std::to_string(elapsed) + " s");
}

void criterion_3_inversion() {
  const auto start = Clock::now();
  const fuzz::RunResult single = fuzz::compare_inversion(1, 100, /*fixpoint=*/false);
  const fuzz::RunResult fixed = fuzz::compare_inversion(1, 100, /*fixpoint=*/true);
  const double elapsed = seconds_since(start);
  report("criterion 3: single-pass inversion equals oracle antitone closure on 100 anatomies",
         single.ok() && single.seeds_run == 100,
         single.ok() ? std::to_string(elapsed) + " s" : single.failures.front().detail);
  report("criterion 3: fixpoint mode agrees as well (no single-pass divergence found)",
         fixed.ok(), fixed.ok() ? "" : fixed.failures.front().detail);
  report("criterion 3 runtime < 20 s", elapsed < 20.0, std::to_string(elapsed) + " s");
}

void criterion_4_matrix_amplification() {
  const auto start = Clock::now();
  const matrix::CharacterMatrix toy = matrix::load_matrix(fixtures::toy_matrix_text());
  const matrix::InferResult engine = matrix::infer(toy, fixtures::demo_anatomy(), vocab());
  const matrix::MatrixStats s = matrix::stats(engine.matrix);
  report("criterion 4: inferred-populated exceeds asserted-populated on the toy matrix",
         s.inferred_cells > s.asserted_cells,
         std::to_string(s.inferred_cells) + " inferred vs " + std::to_string(s.asserted_cells) +
             " asserted of " + std::to_string(s.populated_cells) + " populated");

  const oracle::OracleResult reference =
      oracle::presence(toy, fixtures::demo_anatomy(), vocab());
  bool agree = reference.cells.size() == engine.matrix.taxa.size() * engine.matrix.entities.size();
  for (const auto& [key, expected] : reference.cells)
    agree = agree && engine.matrix.at(key.first, key.second) == expected;
  report("criterion 4: cells equal oracle_presence cell-for-cell", agree);

  const std::string golden_dir = PRESABS_GOLDEN_DIR;
  report("criterion 4: CSV matches the pinned golden file",
         matrix::to_csv(engine.matrix) == read_file(golden_dir + "/toy_matrix.csv"));
  report("criterion 4: stats match the pinned golden file",
         matrix::stats(engine.matrix).to_json() == read_file(golden_dir + "/toy_matrix_stats.json"));
  report("criterion 4 runtime < 1 s", seconds_since(start) < 1.0,
         std::to_string(seconds_since(start)) + " s");
}

void criterion_5_determinism() {
  // Shuffled-axiom copy of the demo.
  Ontology shuffled = fixtures::demo_anatomy();
  std::mt19937_64 rng(99);
  std::shuffle(shuffled.axioms.begin(), shuffled.axioms.end(), rng);
  write_file(work / "demo_shuffled.ofn", render_in_source_order(shuffled));

  const std::string phen = (work / "demo_phenotypes.ofn").string();
  int rc = run_cli("pipeline --anatomy " + (work / "demo_shuffled.ofn").string() +
                   " --phenotypes " + phen + " --out " + (work / "enriched2.ofn").string() +
                   " --hierarchy " + (work / "hier2.ofn").string() + " --report " +
                   (work / "report2.json").string());
  report("criterion 5: pipeline on shuffled axioms exits 0", rc == 0);
  report("criterion 5: enriched ontology is byte-identical under axiom shuffling",
         read_file(work / "enriched.ofn") == read_file(work / "enriched2.ofn"));
  report("criterion 5: hierarchy is byte-identical under axiom shuffling",
         read_file(work / "hier.ofn") == read_file(work / "hier2.ofn"));
  report("criterion 5: report is byte-identical under axiom shuffling",
         read_file(work / "report.json") == read_file(work / "report2.json"));

  // Idempotence: pipeline over its own enriched output.
  rc = run_cli("pipeline --anatomy " + (work / "enriched.ofn").string() + " --out " +
               (work / "enriched3.ofn").string() + " --hierarchy " + (work / "hier3.ofn").string());
  report("criterion 5: pipeline accepts its own enriched output", rc == 0);
  report("criterion 5: rerun on enriched output reproduces the ontology",
         read_file(work / "enriched.ofn") == read_file(work / "enriched3.ofn"));
  report("criterion 5: rerun on enriched output reproduces the hierarchy",
         read_file(work / "hier.ofn") == read_file(work / "hier3.ofn"));

  // infer-matrix determinism across the same anatomy shuffle.
  write_file(work / "toy_matrix.json", fixtures::toy_matrix_text());
  const std::string matrix_args = " --matrix " + (work / "toy_matrix.json").string();
  rc = run_cli("infer-matrix --anatomy " + (work / "demo_anatomy.ofn").string() + matrix_args +
               " --out " + (work / "m1.csv").string() + " --stats " + (work / "s1.json").string());
  const int rc2 =
      run_cli("infer-matrix --anatomy " + (work / "demo_shuffled.ofn").string() + matrix_args +
              " --out " + (work / "m2.csv").string() + " --stats " + (work / "s2.json").string());
  report("criterion 5: infer-matrix runs exit 0", rc == 0 && rc2 == 0);
  report("criterion 5: matrix CSV is byte-identical under axiom shuffling",
         read_file(work / "m1.csv") == read_file(work / "m2.csv"));
  report("criterion 5: matrix stats are byte-identical under axiom shuffling",
         read_file(work / "s1.json") == read_file(work / "s2.json"));
}

void criterion_6_scale() {
  const auto start = Clock::now();
  const Ontology anatomy = fuzz::synthetic_anatomy(10000, 0.30, 0.10, vocab(), 2024);
  const pipeline::PipelineResult r = pipeline::run(anatomy, {}, vocab());
  const double elapsed = seconds_since(start);
  const size_t generated = r.report.absence_equivalences + r.report.haspart_equivalences +
                           r.report.negates_annotations + r.report.workaround_axioms;
  report("criterion 6: 10,000-class synthetic anatomy completes the pipeline",
         r.report.entity_count == 10000,
         std::to_string(generated) + " generated axioms, " + std::to_string(elapsed) + " s");
  report("criterion 6: step-6 subsumptions >= step-4 subsumptions",
         r.report.subsumptions_step6 >= r.report.subsumptions_step4,
         std::to_string(r.report.subsumptions_step4) + " -> " +
             std::to_string(r.report.subsumptions_step6));
  report("criterion 6 runtime < 60 s", elapsed < 60.0, std::to_string(elapsed) + " s");
  const size_t rss_kb = peak_rss_kb();
  report("criterion 6 peak memory < 2 GB", rss_kb > 0 && rss_kb < 2 * 1024 * 1024,
         std::to_string(rss_kb / 1024) + " MB");
}

void criterion_7_roundtrip() {
  const Ontology demo = fixtures::demo_anatomy();
  report("criterion 7: demo ontology round-trips",
         same_content(demo, parse_ontology(serialize_ontology(demo))));
  const Ontology enriched = parse_ontology(read_file(work / "enriched.ofn"));
  report("criterion 7: enriched pipeline output round-trips",
         same_content(enriched, parse_ontology(serialize_ontology(enriched))));
  const fuzz::RunResult r = fuzz::check_roundtrip(500, 50);
  report("criterion 7: 50 fuzz-generated ontologies round-trip", r.ok() && r.seeds_run == 50,
         r.ok() ? "" : r.failures.front().detail);
}

// Exit-code and message contract of the CLI itself.
void cli_contract() {
  const fs::path log = work / "cli_stderr.log";

  int rc = run_cli("classify --in " + (work / "demo_anatomy.ofn").string() + " --out " +
                   (work / "classified.ofn").string());
  const std::string classified = read_file(work / "classified.ofn");
  report("cli: classify exits 0 and keeps the told edge",
         rc == 0 && classified.find("SubClassOf(uberon:dorsal_fin uberon:fin)") != std::string::npos);

  fs::remove(log);
  rc = run_cli("classify --in " + (work / "no_such_file.ofn").string());
  report("cli: missing input exits 1 and names the path",
         rc == 1 && read_file(log).find("no_such_file.ofn") != std::string::npos);

  write_file(work / "complement.ofn",
             "Prefix(:=<http://example.org/t#>)\nOntology(\n"
             "SubClassOf(:a ObjectComplementOf(ObjectSomeValuesFrom(:has_part :b)))\n)\n");
  fs::remove(log);
  rc = run_cli("classify --in " + (work / "complement.ofn").string());
  report("cli: complement input exits 2 and cites the expression",
         rc == 2 && read_file(log).find("ObjectComplementOf") != std::string::npos);

  rc = run_cli("demo --dir " + (work / "demo_out").string() + " > /dev/null");
  report("cli: demo writes the three fixture files",
         rc == 0 && fs::exists(work / "demo_out" / "demo_anatomy.ofn") &&
             fs::exists(work / "demo_out" / "demo_phenotypes.ofn") &&
             fs::exists(work / "demo_out" / "toy_matrix.json"));

  rc = run_cli("pipeline --anatomy " + (work / "demo_anatomy.ofn").string() +
               " --set anatomy_root=uberon:fin --hierarchy " + (work / "hier_fin.ofn").string());
  const std::string fin_hier = read_file(work / "hier_fin.ofn");
  report("cli: vocabulary override narrows the entity set",
         rc == 0 && fin_hier.find("absent+dorsal_fin") != std::string::npos &&
             fin_hier.find("absent+humerus") == std::string::npos);

  write_file(work / "vocab.conf", "# narrow the root\nanatomy_root: uberon:fin\n");
  rc = run_cli("pipeline --anatomy " + (work / "demo_anatomy.ofn").string() + " --config " +
               (work / "vocab.conf").string() + " --hierarchy " + (work / "hier_fin2.ofn").string());
  report("cli: config file matches the equivalent --set override",
         rc == 0 && read_file(work / "hier_fin2.ofn") == fin_hier);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: presabs_acceptance <path-to-presabs-cli>\n";
    return 2;
  }
  cli_path = argv[1];
  work = fs::current_path() / "acceptance_work";
  fs::create_directories(work);

  criterion_1_demo_entailments();
  criterion_2_oracle_equivalence();
  criterion_3_inversion();
  criterion_4_matrix_amplification();
  criterion_5_determinism();
  criterion_6_scale();
  criterion_7_roundtrip();
  cli_contract();

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(g_failures))
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
