#include <algorithm>
#include <random>

#include "doctest.h"
#include "presabs/fixtures.hpp"
#include "presabs/fuzz.hpp"
#include "presabs/reasoner.hpp"
#include "presabs/syntax.hpp"

using namespace presabs;

namespace {

Ontology parse(const std::string& axioms) {
  return parse_ontology("Prefix(:=<http://example.org/t#>)\nOntology(<http://example.org/t>\n" +
                        axioms + "\n)\n");
}

Iri t(const std::string& local) { return Iri{"http://example.org/t#" + local}; }

bool subsumed(const el::Classification& c, const std::string& sub, const std::string& sup) {
  return c.subsumptions.is_subsumed_by(t(sub), t(sup));
}

}  // namespace

TEST_CASE("normalization of a nested conjunction filler is the textbook four axioms") {
  const Ontology o = parse("SubClassOf(:a ObjectSomeValuesFrom(:r ObjectIntersectionOf(:b :c)))");
  const el::NormalizedOntology n = el::normalize(o);
  CHECK(n.exist_rights.size() == 1);
  CHECK(n.atomic_subs.size() == 2);
  CHECK(n.conj_subs.size() == 1);
  CHECK(n.exist_lefts.empty());
  CHECK(n.axiom_count() == 4);
}

TEST_CASE("normalization of the punned absence definition is four axioms plus the atom") {
  const Ontology o = parse(
      "EquivalentClasses(:absent_e ObjectIntersectionOf(:lacks ObjectHasValue(:towards :e)))");
  const el::NormalizedOntology n = el::normalize(o);
  CHECK(n.axiom_count() == 4);
  CHECK(n.exist_rights.size() == 1);  // absent_e -> towards some {e}
  CHECK(n.exist_lefts.size() == 1);   // towards some {e} -> detector
  CHECK(n.conj_subs.size() == 1);
  CHECK(n.atomic_subs.size() == 1);  // absent_e -> lacks
  // The punned atom is interned as a fresh class, distinct from :e itself.
  size_t fresh = 0;
  for (el::ClassId id = 0; id < n.classes.size(); ++id)
    if (n.classes.is_fresh(id)) ++fresh;
  CHECK(fresh == 2);  // the atom and the detector name
}

TEST_CASE("normalization rejects complement with provenance") {
  const Ontology o = parse("SubClassOf(:a ObjectComplementOf(:b))");
  CHECK_THROWS_AS(el::normalize(o), ComplementNotSupported);
  try {
    el::normalize(o);
  } catch (const ComplementNotSupported& e) {
    CHECK(e.expression.find("ObjectComplementOf") != std::string::npos);
  }
}

TEST_CASE("inverse property axioms are dropped with a warning") {
  const Ontology o = parse("InverseObjectProperties(:p :q)\nSubClassOf(:a :b)");
  const el::NormalizedOntology n = el::normalize(o);
  REQUIRE(n.warnings.size() == 1);
  CHECK(n.warnings[0].find("InverseObjectProperties") != std::string::npos);
  CHECK(n.axiom_count() == 1);
}

TEST_CASE("told existentials entail subsumption between their hasPart classes") {
  const Ontology o = parse(
      "SubClassOf(:dorsal_fin :fin)\n"
      "EquivalentClasses(:haspart_df ObjectSomeValuesFrom(:has_part :dorsal_fin))\n"
      "EquivalentClasses(:haspart_fin ObjectSomeValuesFrom(:has_part :fin))");
  const el::Classification c = el::classify(o);
  CHECK(subsumed(c, "haspart_df", "haspart_fin"));
  CHECK_FALSE(subsumed(c, "haspart_fin", "haspart_df"));
}

TEST_CASE("a declared class with no axioms subsumes only itself and owl:Thing") {
  const Ontology o = parse("Declaration(Class(:a))");
  const el::Classification c = el::classify(o);
  const el::ClassId a = c.subsumptions.classes().require(t("a"));
  const auto& supers = c.subsumptions.supers(a);
  REQUIRE(supers.size() == 2);
  CHECK(c.subsumptions.is_subsumed_by(t("a"), t("a")));
  CHECK(c.subsumptions.is_subsumed_by(t("a"), iris::owl_thing()));
}

TEST_CASE("property chain composes told existentials") {
  const Ontology o = parse(
      "SubClassOf(:limb ObjectSomeValuesFrom(:develops_from :limb_bud))\n"
      "SubObjectPropertyOf(ObjectPropertyChain(:has_part :develops_from) :has_part)\n"
      "SubClassOf(:x ObjectSomeValuesFrom(:has_part :limb))\n"
      "EquivalentClasses(:haspart_limb_bud ObjectSomeValuesFrom(:has_part :limb_bud))");
  const el::Classification c = el::classify(o);
  CHECK(subsumed(c, "x", "haspart_limb_bud"));
}

TEST_CASE("classification reduces transitive edges") {
  const Ontology o = parse("SubClassOf(:a :b)\nSubClassOf(:b :c)\nSubClassOf(:a :c)");
  const el::Classification c = el::classify(o);
  const auto& h = c.hierarchy;
  CHECK(h.direct_supers.at(t("a")) == std::vector<Iri>{t("b")});
  CHECK(h.direct_supers.at(t("b")) == std::vector<Iri>{t("c")});
  CHECK(subsumed(c, "a", "c"));
}

TEST_CASE("mutual subsumption forms one group with the least IRI as representative") {
  const Ontology o = parse("SubClassOf(:a :b)\nSubClassOf(:b :a)");
  const el::Classification c = el::classify(o);
  CHECK(c.hierarchy.rep_of(t("b")) == t("a"));
  CHECK(c.hierarchy.members_of(t("a")) == std::vector<Iri>{t("a"), t("b")});
}

TEST_CASE("is_subsumed_by is reflexive, ordered, and rejects unknown IRIs") {
  const Ontology o = parse("SubClassOf(:dorsal_fin :fin)");
  const el::Classification c = el::classify(o);
  CHECK(subsumed(c, "dorsal_fin", "dorsal_fin"));
  CHECK(subsumed(c, "dorsal_fin", "fin"));
  CHECK_FALSE(subsumed(c, "fin", "dorsal_fin"));
  CHECK_THROWS_AS(c.subsumptions.is_subsumed_by(t("fin"), t("nope")), UnknownIri);
}

TEST_CASE("bottom propagates backwards over links") {
  const Ontology o = parse(
      "SubClassOf(:b owl:Nothing)\n"
      "SubClassOf(:a ObjectSomeValuesFrom(:r :b))");
  const el::Classification c = el::classify(o);
  CHECK(c.subsumptions.is_subsumed_by(t("a"), iris::owl_nothing()));
  const auto unsat = c.hierarchy.unsatisfiable;
  CHECK(std::find(unsat.begin(), unsat.end(), t("a")) != unsat.end());
  CHECK(std::find(unsat.begin(), unsat.end(), t("b")) != unsat.end());
}

TEST_CASE("classification is independent of axiom order") {
  const Ontology demo = fixtures::demo_anatomy();
  const std::string reference = serialize_ontology(demo);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 5; ++round) {
    Ontology shuffled = demo;
    std::shuffle(shuffled.axioms.begin(), shuffled.axioms.end(), rng);
    Ontology hier_ref, hier_shuf;
    hier_ref.axioms = el::classify(demo).hierarchy.to_axioms();
    hier_shuf.axioms = el::classify(shuffled).hierarchy.to_axioms();
    CHECK(serialize_ontology(hier_ref) == serialize_ontology(hier_shuf));
    CHECK(serialize_ontology(shuffled) == reference);
  }
}

TEST_CASE("adding axioms never removes derived subsumptions") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Ontology o = fuzz::random_ontology(seed);
    const auto before = el::classify(o).subsumptions.named_pairs();
    std::mt19937_64 rng(seed * 31 + 1);
    std::vector<Iri> classes;
    for (const Axiom& ax : o.axioms)
      if (const auto* d = std::get_if<DeclarationAx>(&ax))
        if (d->kind == DeclKind::Class) classes.push_back(d->iri);
    std::uniform_int_distribution<size_t> pick(0, classes.size() - 1);
    o.axioms.push_back(
        SubClassOfAx{Expr::named(classes[pick(rng)]), Expr::named(classes[pick(rng)])});
    const auto after = el::classify(o).subsumptions.named_pairs();
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST_CASE("hierarchy closure reproduces the named subsumption relation") {
  for (uint64_t seed = 40; seed < 60; ++seed) {
    const Ontology o = fuzz::random_ontology(seed);
    const el::Classification c = el::classify(o);
    auto closure = c.hierarchy.closure();
    auto direct = c.subsumptions.named_pairs();
    std::sort(direct.begin(), direct.end());
    CHECK(closure == direct);
  }
}

TEST_CASE("classify propagates the complement error") {
  const Ontology o = parse("SubClassOf(:a ObjectComplementOf(ObjectSomeValuesFrom(:r :b)))");
  CHECK_THROWS_AS(el::classify(o), ComplementNotSupported);
}

TEST_CASE("owl:Thing on the left reaches every class") {
  const Ontology o = parse("Declaration(Class(:a))\nDeclaration(Class(:b))\nSubClassOf(owl:Thing :c)");
  const el::Classification c = el::classify(o);
  CHECK(subsumed(c, "a", "c"));
  CHECK(subsumed(c, "b", "c"));
  CHECK(c.subsumptions.is_subsumed_by(iris::owl_thing(), t("c")));
}

TEST_CASE("existential over owl:Thing fires for any link") {
  const Ontology o = parse(
      "SubClassOf(ObjectSomeValuesFrom(:r owl:Thing) :related)\n"
      "SubClassOf(:a ObjectSomeValuesFrom(:r :b))\n"
      "Declaration(Class(:lone))");
  const el::Classification c = el::classify(o);
  CHECK(subsumed(c, "a", "related"));
  CHECK_FALSE(subsumed(c, "lone", "related"));
}

TEST_CASE("nested intersections agree with the flat reading") {
  const Ontology nested = parse(
      "EquivalentClasses(:x ObjectIntersectionOf(:a ObjectIntersectionOf(:b :c)))\n"
      "SubClassOf(:y :a)\nSubClassOf(:y :b)\nSubClassOf(:y :c)");
  const el::Classification c = el::classify(nested);
  CHECK(subsumed(c, "y", "x"));
  CHECK(subsumed(c, "x", "a"));
  CHECK(subsumed(c, "x", "b"));
  CHECK(subsumed(c, "x", "c"));
}
