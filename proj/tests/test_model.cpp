#include <algorithm>

#include "doctest.h"
#include "presabs/fixtures.hpp"
#include "presabs/syntax.hpp"

using namespace presabs;

namespace {

Ontology parse(const std::string& text) { return parse_ontology(text); }

std::string wrap(const std::string& axioms) {
  return "Prefix(:=<http://example.org/t#>)\nOntology(<http://example.org/t>\n" + axioms + "\n)\n";
}

}  // namespace

TEST_CASE("single atomic subclass axiom") {
  const Ontology o = parse(wrap("SubClassOf(:dorsal_fin :fin)"));
  REQUIRE(o.axioms.size() == 1);
  const auto* ax = std::get_if<SubClassOfAx>(&o.axioms[0]);
  REQUIRE(ax != nullptr);
  CHECK(ax->sub->kind() == Expr::Kind::Named);
  CHECK(ax->sub->iri().value == "http://example.org/t#dorsal_fin");
  CHECK(ax->sup->iri().value == "http://example.org/t#fin");
}

TEST_CASE("absence equivalence parses to intersection with hasValue") {
  const Ontology o = parse(wrap(
      "EquivalentClasses(:absent_dorsal_fin "
      "ObjectIntersectionOf(:lacks_all_parts_of_type ObjectHasValue(:towards :dorsal_fin)))"));
  REQUIRE(o.axioms.size() == 1);
  const auto* ax = std::get_if<EquivalentClassesAx>(&o.axioms[0]);
  REQUIRE(ax != nullptr);
  const ExprPtr inter = ax->a->kind() == Expr::Kind::Intersection ? ax->a : ax->b;
  REQUIRE(inter->kind() == Expr::Kind::Intersection);
  REQUIRE(inter->operands().size() == 2);
  const bool has_value = std::any_of(inter->operands().begin(), inter->operands().end(),
                                     [](const ExprPtr& e) { return e->kind() == Expr::Kind::HasValue; });
  const bool named = std::any_of(inter->operands().begin(), inter->operands().end(),
                                 [](const ExprPtr& e) { return e->kind() == Expr::Kind::Named; });
  CHECK(has_value);
  CHECK(named);
}

TEST_CASE("property chain axiom") {
  const Ontology o = parse(wrap(
      "SubObjectPropertyOf(ObjectPropertyChain(:implies_presence_of :part_of) :implies_presence_of)"));
  REQUIRE(o.axioms.size() == 1);
  const auto* ax = std::get_if<SubPropertyChainAx>(&o.axioms[0]);
  REQUIRE(ax != nullptr);
  CHECK(ax->first.local_name() == "implies_presence_of");
  CHECK(ax->second.local_name() == "part_of");
  CHECK(ax->sup.local_name() == "implies_presence_of");
}

TEST_CASE("chain of length other than two is rejected") {
  CHECK_THROWS_AS(parse(wrap("SubObjectPropertyOf(ObjectPropertyChain(:p :q :r) :s)")), ParseError);
  CHECK_THROWS_AS(parse(wrap("SubObjectPropertyOf(ObjectPropertyChain(:p) :s)")), ParseError);
}

TEST_CASE("unknown prefix and syntax errors carry position") {
  try {
    parse("Ontology(\nSubClassOf(oops:a oops:b)\n)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("unknown prefix") != std::string::npos);
  }
  try {
    parse(wrap("SubClassOf(:a"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
}

TEST_CASE("unsupported constructs are named in the error") {
  try {
    parse(wrap("SubClassOf(:a ObjectUnionOf(:b :c))"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("ObjectUnionOf") != std::string::npos);
  }
  try {
    parse(wrap("DisjointClasses(:a :b)"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("DisjointClasses") != std::string::npos);
  }
}

TEST_CASE("annotations with literal values are dropped with a warning") {
  std::vector<std::string> warnings;
  const Ontology o = parse_ontology(
      wrap("AnnotationAssertion(rdfs:label :fin \"the fin\")\nSubClassOf(:a :b)"), nullptr,
      &warnings);
  CHECK(o.axioms.size() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("label") != std::string::npos);
}

TEST_CASE("intersection operand order is canonical") {
  const Ontology a = parse(wrap("SubClassOf(:x ObjectIntersectionOf(:a :b))"));
  const Ontology b = parse(wrap("SubClassOf(:x ObjectIntersectionOf(:b :a))"));
  CHECK(axiom_equal(a.axioms[0], b.axioms[0]));
  CHECK(serialize_ontology(a) == serialize_ontology(b));
}

TEST_CASE("empty ontology serializes to a header-only document") {
  Ontology o;
  o.iri = Iri{"http://example.org/empty"};
  const std::string doc = serialize_ontology(o);
  CHECK(doc == "Ontology(<http://example.org/empty>\n)\n");
  CHECK(same_content(parse(doc), o));
}

TEST_CASE("serialization round-trips the demo ontology") {
  const Ontology demo = fixtures::demo_anatomy();
  const std::string once = serialize_ontology(demo);
  const Ontology back = parse(once);
  CHECK(same_content(demo, back));
  CHECK(serialize_ontology(back) == once);
}

TEST_CASE("one chain axiom serializes to exactly one ObjectPropertyChain line") {
  Ontology o;
  o.axioms.push_back(SubPropertyChainAx{Iri{"http://x#p"}, Iri{"http://x#q"}, Iri{"http://x#p"}});
  const std::string doc = serialize_ontology(o);
  size_t count = 0;
  for (size_t pos = doc.find("ObjectPropertyChain"); pos != std::string::npos;
       pos = doc.find("ObjectPropertyChain", pos + 1))
    ++count;
  CHECK(count == 1);
}

TEST_CASE("merge: identity, idempotence, union size") {
  const Ontology demo = fixtures::demo_anatomy();
  const Ontology empty;
  CHECK(same_content(merge_ontologies(demo, empty), demo));
  CHECK(same_content(merge_ontologies(demo, demo), demo));

  Ontology extra;
  extra.axioms.push_back(SubClassOfAx{Expr::named(fixtures::demo_class("fin")),
                                      Expr::named(fixtures::demo_class("anatomical_structure"))});
  extra.axioms.push_back(SubClassOfAx{Expr::named(Iri{"http://example.org/new#a"}),
                                      Expr::named(Iri{"http://example.org/new#b"})});
  const size_t a = demo.canonical_axioms().size();
  const size_t g = extra.canonical_axioms().size();
  const Ontology merged = merge_ontologies(demo, extra);
  // one overlapping axiom
  CHECK(merged.canonical_axioms().size() == a + g - 1);
}

TEST_CASE("merge rejects conflicting prefix bindings") {
  Ontology a, b;
  a.prefixes["x"] = "http://one#";
  b.prefixes["x"] = "http://two#";
  CHECK_THROWS_AS(merge_ontologies(a, b), PrefixConflict);
}

TEST_CASE("comments and whitespace are insignificant") {
  const Ontology o = parse(
      "Prefix(:=<http://example.org/t#>)  # binding\n"
      "Ontology(<http://example.org/t>\n"
      "  SubClassOf( :a\n :b )  # told edge\n"
      ")\n");
  REQUIRE(o.axioms.size() == 1);
}

TEST_CASE("full IRIs with hash survive the comment rule") {
  const Ontology o = parse("Ontology(\nSubClassOf(<http://x.org/v#a> <http://x.org/v#b>)\n)");
  const auto* ax = std::get_if<SubClassOfAx>(&o.axioms[0]);
  REQUIRE(ax != nullptr);
  CHECK(ax->sub->iri().value == "http://x.org/v#a");
}

TEST_CASE("owl:Thing and owl:Nothing map to Top and Bottom") {
  const Ontology o = parse(wrap("SubClassOf(:a owl:Thing)\nSubClassOf(:b owl:Nothing)"));
  const auto axioms = o.canonical_axioms();
  bool saw_top = false, saw_bottom = false;
  for (const Axiom& ax : axioms)
    if (const auto* sc = std::get_if<SubClassOfAx>(&ax)) {
      saw_top |= sc->sup->kind() == Expr::Kind::Top;
      saw_bottom |= sc->sup->kind() == Expr::Kind::Bottom;
    }
  CHECK(saw_top);
  CHECK(saw_bottom);
}

TEST_CASE("minted local names with plus signs round-trip as prefixed names") {
  Ontology o;
  o.prefixes["gen"] = "http://purl.org/presabs/gen#";
  o.axioms.push_back(SubClassOfAx{Expr::named(Iri{"http://purl.org/presabs/gen#absent+fin"}),
                                  Expr::named(Iri{"http://purl.org/presabs/gen#absent+dorsal_fin"})});
  const std::string doc = serialize_ontology(o);
  CHECK(doc.find("gen:absent+fin") != std::string::npos);
  CHECK(same_content(parse(doc), o));
}
