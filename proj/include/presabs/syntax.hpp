// Parser and serializer for the OWL functional-style syntax subset the
// toolkit exchanges: Prefix declarations followed by an Ontology(...) block
// of Declaration / SubClassOf / EquivalentClasses / SubObjectPropertyOf
// (plain or ObjectPropertyChain of length 2) / InverseObjectProperties /
// AnnotationAssertion axioms over IRI / owl:Thing / owl:Nothing /
// ObjectIntersectionOf / ObjectSomeValuesFrom / ObjectHasValue /
// ObjectComplementOf expressions.

#ifndef PRESABS_SYNTAX_HPP
#define PRESABS_SYNTAX_HPP

#include <string>
#include <string_view>
#include <vector>

#include "presabs/model.hpp"

namespace presabs {

// Parses a document. `base_prefixes` supplies bindings available without a
// Prefix line (defaults to builtin_prefixes()); document declarations
// shadow them. Annotation assertions whose target is a literal are outside
// the model; they are dropped with a note in `warnings`.
Ontology parse_ontology(std::string_view text, const PrefixMap* base_prefixes = nullptr,
                        std::vector<std::string>* warnings = nullptr);

// Deterministic rendering: prefixes sorted, axioms in canonical order,
// duplicates collapsed. Output re-parses to the same canonical axiom set.
std::string serialize_ontology(const Ontology& o);

// Single-axiom rendering with the given prefix map (builtin bindings are
// consulted as a fallback). Used for diagnostics and file output alike.
std::string render_axiom(const Axiom& ax, const PrefixMap& prefixes);
std::string render_expr(const Expr& e, const PrefixMap& prefixes);
std::string render_iri(const Iri& iri, const PrefixMap& prefixes);

}  // namespace presabs

#endif  // PRESABS_SYNTAX_HPP
