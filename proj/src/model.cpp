#include "presabs/model.hpp"

#include <algorithm>
#include <set>

namespace presabs {

std::string Iri::local_name() const {
  const auto pos = value.find_last_of("#/:");
  if (pos == std::string::npos || pos + 1 >= value.size()) return value;
  return value.substr(pos + 1);
}

ExprPtr Expr::top() {
  static const ExprPtr e{new Expr(Kind::Top, {}, {}, {})};
  return e;
}

ExprPtr Expr::bottom() {
  static const ExprPtr e{new Expr(Kind::Bottom, {}, {}, {})};
  return e;
}

ExprPtr Expr::named(Iri iri) {
  if (iri == iris::owl_thing()) return top();
  if (iri == iris::owl_nothing()) return bottom();
  return ExprPtr(new Expr(Kind::Named, std::move(iri), {}, {}));
}

ExprPtr Expr::intersection(std::vector<ExprPtr> operands) {
  if (operands.size() < 2) throw std::invalid_argument("ObjectIntersectionOf needs at least two operands");
  std::sort(operands.begin(), operands.end(),
            [](const ExprPtr& a, const ExprPtr& b) { return compare(a, b) < 0; });
  return ExprPtr(new Expr(Kind::Intersection, {}, {}, std::move(operands)));
}

ExprPtr Expr::some(Iri property, ExprPtr filler) {
  return ExprPtr(new Expr(Kind::SomeValues, {}, std::move(property), {std::move(filler)}));
}

ExprPtr Expr::has_value(Iri property, Iri individual) {
  return ExprPtr(new Expr(Kind::HasValue, std::move(individual), std::move(property), {}));
}

ExprPtr Expr::complement(ExprPtr operand) {
  return ExprPtr(new Expr(Kind::Complement, {}, {}, {std::move(operand)}));
}

int compare(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  const auto cmp_iri = [](const Iri& x, const Iri& y) { return x.value.compare(y.value); };
  switch (a.kind()) {
    case Expr::Kind::Top:
    case Expr::Kind::Bottom:
      return 0;
    case Expr::Kind::Named:
      return cmp_iri(a.iri(), b.iri());
    case Expr::Kind::HasValue: {
      if (int c = cmp_iri(a.property(), b.property())) return c;
      return cmp_iri(a.individual(), b.individual());
    }
    case Expr::Kind::SomeValues: {
      if (int c = cmp_iri(a.property(), b.property())) return c;
      return compare(a.filler(), b.filler());
    }
    case Expr::Kind::Complement:
      return compare(a.operand(), b.operand());
    case Expr::Kind::Intersection: {
      const auto& xs = a.operands();
      const auto& ys = b.operands();
      for (size_t i = 0; i < std::min(xs.size(), ys.size()); ++i)
        if (int c = compare(xs[i], ys[i])) return c;
      if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

int compare(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return 0;
  return compare(*a, *b);
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return compare(a, b) == 0; }

std::string expr_key(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Top:
      return "T";
    case Expr::Kind::Bottom:
      return "F";
    case Expr::Kind::Named:
      return "N<" + e.iri().value + ">";
    case Expr::Kind::SomeValues:
      return "S<" + e.property().value + ">(" + expr_key(*e.filler()) + ")";
    case Expr::Kind::HasValue:
      return "V<" + e.property().value + "><" + e.individual().value + ">";
    case Expr::Kind::Complement:
      return "C(" + expr_key(*e.operand()) + ")";
    case Expr::Kind::Intersection: {
      std::string out = "I(";
      for (size_t i = 0; i < e.operands().size(); ++i) {
        if (i) out += ",";
        out += expr_key(*e.operands()[i]);
      }
      return out + ")";
    }
  }
  return {};
}

Axiom make_equivalent(ExprPtr a, ExprPtr b) {
  if (compare(a, b) > 0) std::swap(a, b);
  return EquivalentClassesAx{std::move(a), std::move(b)};
}

Axiom make_inverse(Iri p, Iri q) {
  if (q < p) std::swap(p, q);
  return InversePropertiesAx{std::move(p), std::move(q)};
}

namespace {

int cmp_iri(const Iri& a, const Iri& b) { return a.value.compare(b.value); }

struct AxiomCompare {
  int operator()(const DeclarationAx& a, const DeclarationAx& b) const {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    return cmp_iri(a.iri, b.iri);
  }
  int operator()(const SubPropertyOfAx& a, const SubPropertyOfAx& b) const {
    if (int c = cmp_iri(a.sub, b.sub)) return c;
    return cmp_iri(a.sup, b.sup);
  }
  int operator()(const SubPropertyChainAx& a, const SubPropertyChainAx& b) const {
    if (int c = cmp_iri(a.first, b.first)) return c;
    if (int c = cmp_iri(a.second, b.second)) return c;
    return cmp_iri(a.sup, b.sup);
  }
  int operator()(const InversePropertiesAx& a, const InversePropertiesAx& b) const {
    if (int c = cmp_iri(a.p, b.p)) return c;
    return cmp_iri(a.q, b.q);
  }
  int operator()(const SubClassOfAx& a, const SubClassOfAx& b) const {
    if (int c = compare(a.sub, b.sub)) return c;
    return compare(a.sup, b.sup);
  }
  int operator()(const EquivalentClassesAx& a, const EquivalentClassesAx& b) const {
    if (int c = compare(a.a, b.a)) return c;
    return compare(a.b, b.b);
  }
  int operator()(const AnnotationAssertionAx& a, const AnnotationAssertionAx& b) const {
    if (int c = cmp_iri(a.property, b.property)) return c;
    if (int c = cmp_iri(a.subject, b.subject)) return c;
    return cmp_iri(a.target, b.target);
  }
  template <class A, class B>
  int operator()(const A&, const B&) const {
    return 0;  // unreachable; dispatch guards on index
  }
};

}  // namespace

int compare(const Axiom& a, const Axiom& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  return std::visit(AxiomCompare{}, a, b);
}

bool axiom_equal(const Axiom& a, const Axiom& b) { return compare(a, b) == 0; }

std::vector<Axiom> Ontology::canonical_axioms() const {
  std::vector<Axiom> out = axioms;
  std::sort(out.begin(), out.end(), [](const Axiom& a, const Axiom& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Axiom& a, const Axiom& b) { return compare(a, b) == 0; }),
            out.end());
  return out;
}

bool Ontology::contains(const Axiom& ax) const {
  return std::any_of(axioms.begin(), axioms.end(),
                     [&](const Axiom& other) { return axiom_equal(ax, other); });
}

bool same_content(const Ontology& a, const Ontology& b) {
  if (a.iri.has_value() != b.iri.has_value()) return false;
  if (a.iri && *a.iri != *b.iri) return false;
  const auto ca = a.canonical_axioms();
  const auto cb = b.canonical_axioms();
  if (ca.size() != cb.size()) return false;
  for (size_t i = 0; i < ca.size(); ++i)
    if (!axiom_equal(ca[i], cb[i])) return false;
  return true;
}

Ontology merge_ontologies(std::span<const Ontology> inputs) {
  Ontology out;
  for (const Ontology& o : inputs) {
    if (!out.iri && o.iri) out.iri = o.iri;
    for (const auto& [prefix, ns] : o.prefixes) {
      auto it = out.prefixes.find(prefix);
      if (it == out.prefixes.end()) {
        out.prefixes.emplace(prefix, ns);
      } else if (it->second != ns) {
        throw PrefixConflict("prefix '" + prefix + ":' bound to both <" + it->second + "> and <" +
                             ns + ">");
      }
    }
    out.axioms.insert(out.axioms.end(), o.axioms.begin(), o.axioms.end());
  }
  out.axioms = out.canonical_axioms();
  return out;
}

Ontology merge_ontologies(const Ontology& a, const Ontology& b) {
  const Ontology inputs[] = {a, b};
  return merge_ontologies(std::span<const Ontology>(inputs, 2));
}

Vocabulary Vocabulary::defaults() {
  Vocabulary v;
  v.inheres_in = Iri{"http://purl.obolibrary.org/obo/ro#inheres_in"};
  v.towards = Iri{"http://purl.obolibrary.org/obo/ro#towards"};
  v.implies_presence_of = Iri{"http://purl.org/presabs/gen#implies_presence_of"};
  v.part_of = Iri{"http://purl.obolibrary.org/obo/ro#part_of"};
  v.has_part = Iri{"http://purl.obolibrary.org/obo/ro#has_part"};
  v.develops_from = Iri{"http://purl.obolibrary.org/obo/ro#develops_from"};
  v.lacks_all_parts_of_type = Iri{"http://purl.obolibrary.org/obo/pato#lacks_all_parts_of_type"};
  v.quality_absent = Iri{"http://purl.obolibrary.org/obo/pato#absent"};
  v.quality_present = Iri{"http://purl.obolibrary.org/obo/pato#present"};
  v.negates = Iri{"http://purl.org/presabs/gen#negates"};
  v.anatomy_root = Iri{"http://purl.obolibrary.org/obo/uberon#anatomical_structure"};
  return v;
}

void Vocabulary::validate() const {
  const Iri* slots[] = {&inheres_in,    &towards,        &implies_presence_of,
                        &part_of,       &has_part,       &develops_from,
                        &lacks_all_parts_of_type, &quality_absent, &quality_present,
                        &negates,       &anatomy_root};
  std::set<std::string> seen;
  for (const Iri* slot : slots) {
    if (slot->empty()) throw std::invalid_argument("vocabulary slot must not be empty");
    if (!seen.insert(slot->value).second)
      throw std::invalid_argument("vocabulary slots must be distinct; duplicate " + slot->value);
  }
}

const PrefixMap& builtin_prefixes() {
  static const PrefixMap m = {
      {"owl", "http://www.w3.org/2002/07/owl#"},
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
      {"xsd", "http://www.w3.org/2001/XMLSchema#"},
      {"ro", "http://purl.obolibrary.org/obo/ro#"},
      {"pato", "http://purl.obolibrary.org/obo/pato#"},
      {"uberon", "http://purl.obolibrary.org/obo/uberon#"},
      {"gen", "http://purl.org/presabs/gen#"},
  };
  return m;
}

}  // namespace presabs
