#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "presabs/syntax.hpp"

namespace presabs {
namespace {

bool valid_local(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '+'))
      return false;
  return true;
}

// Longest declared namespace wins; builtin bindings fill the gaps. Falls
// back to <full-iri> when no binding yields a well-formed prefixed name.
struct IriWriter {
  const PrefixMap& doc;
  std::set<std::string>* used = nullptr;  // prefixes actually emitted

  std::string operator()(const Iri& iri) const {
    if (iri == iris::owl_thing()) return tag("owl", "Thing");
    if (iri == iris::owl_nothing()) return tag("owl", "Nothing");
    const std::string* best_ns = nullptr;
    const std::string* best_prefix = nullptr;
    auto consider = [&](const std::string& prefix, const std::string& ns) {
      if (iri.value.size() <= ns.size() || iri.value.compare(0, ns.size(), ns) != 0) return;
      if (!valid_local(std::string_view(iri.value).substr(ns.size()))) return;
      if (best_ns && (ns.size() < best_ns->size() ||
                      (ns.size() == best_ns->size() && prefix >= *best_prefix)))
        return;
      best_ns = &ns;
      best_prefix = &prefix;
    };
    for (const auto& [prefix, ns] : doc) consider(prefix, ns);
    if (!best_ns)
      for (const auto& [prefix, ns] : builtin_prefixes())
        if (!doc.count(prefix)) consider(prefix, ns);
    if (!best_ns) return "<" + iri.value + ">";
    return tag(*best_prefix, iri.value.substr(best_ns->size()));
  }

  std::string tag(const std::string& prefix, const std::string& local) const {
    if (used) used->insert(prefix);
    return prefix + ":" + local;
  }
};

std::string write_expr(const Expr& e, const IriWriter& w) {
  switch (e.kind()) {
    case Expr::Kind::Top:
      return w.tag("owl", "Thing");
    case Expr::Kind::Bottom:
      return w.tag("owl", "Nothing");
    case Expr::Kind::Named:
      return w(e.iri());
    case Expr::Kind::SomeValues:
      return "ObjectSomeValuesFrom(" + w(e.property()) + " " + write_expr(*e.filler(), w) + ")";
    case Expr::Kind::HasValue:
      return "ObjectHasValue(" + w(e.property()) + " " + w(e.individual()) + ")";
    case Expr::Kind::Complement:
      return "ObjectComplementOf(" + write_expr(*e.operand(), w) + ")";
    case Expr::Kind::Intersection: {
      std::string out = "ObjectIntersectionOf(";
      for (size_t i = 0; i < e.operands().size(); ++i) {
        if (i) out += " ";
        out += write_expr(*e.operands()[i], w);
      }
      return out + ")";
    }
  }
  return {};
}

struct AxiomWriter {
  const IriWriter& w;

  std::string operator()(const DeclarationAx& ax) const {
    const char* kind = ax.kind == DeclKind::Class      ? "Class"
                       : ax.kind == DeclKind::Property ? "ObjectProperty"
                                                       : "NamedIndividual";
    return std::string("Declaration(") + kind + "(" + w(ax.iri) + "))";
  }
  std::string operator()(const SubPropertyOfAx& ax) const {
    return "SubObjectPropertyOf(" + w(ax.sub) + " " + w(ax.sup) + ")";
  }
  std::string operator()(const SubPropertyChainAx& ax) const {
    return "SubObjectPropertyOf(ObjectPropertyChain(" + w(ax.first) + " " + w(ax.second) + ") " +
           w(ax.sup) + ")";
  }
  std::string operator()(const InversePropertiesAx& ax) const {
    return "InverseObjectProperties(" + w(ax.p) + " " + w(ax.q) + ")";
  }
  std::string operator()(const SubClassOfAx& ax) const {
    return "SubClassOf(" + write_expr(*ax.sub, w) + " " + write_expr(*ax.sup, w) + ")";
  }
  std::string operator()(const EquivalentClassesAx& ax) const {
    return "EquivalentClasses(" + write_expr(*ax.a, w) + " " + write_expr(*ax.b, w) + ")";
  }
  std::string operator()(const AnnotationAssertionAx& ax) const {
    return "AnnotationAssertion(" + w(ax.property) + " " + w(ax.subject) + " " + w(ax.target) + ")";
  }
};

}  // namespace

std::string render_iri(const Iri& iri, const PrefixMap& prefixes) {
  return IriWriter{prefixes}(iri);
}

std::string render_expr(const Expr& e, const PrefixMap& prefixes) {
  IriWriter w{prefixes};
  return write_expr(e, w);
}

std::string render_axiom(const Axiom& ax, const PrefixMap& prefixes) {
  IriWriter w{prefixes};
  return std::visit(AxiomWriter{w}, ax);
}

std::string serialize_ontology(const Ontology& o) {
  std::set<std::string> used;
  IriWriter w{o.prefixes, &used};
  std::vector<std::string> lines;
  for (const Axiom& ax : o.canonical_axioms()) lines.push_back(std::visit(AxiomWriter{w}, ax));

  std::ostringstream out;
  for (const std::string& prefix : used) {
    auto it = o.prefixes.find(prefix);
    const std::string& ns = it != o.prefixes.end() ? it->second : builtin_prefixes().at(prefix);
    out << "Prefix(" << prefix << ":=<" << ns << ">)\n";
  }
  out << "Ontology(";
  if (o.iri) out << "<" << o.iri->value << ">";
  out << "\n";
  for (const std::string& line : lines) out << line << "\n";
  out << ")\n";
  return out.str();
}

}  // namespace presabs
