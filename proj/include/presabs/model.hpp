// Core ontology data model: IRIs, class expressions, axioms, ontologies,
// and the configurable vocabulary of properties/qualities the toolkit
// builds on.

#ifndef PRESABS_MODEL_HPP
#define PRESABS_MODEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace presabs {

// An expanded (absolute) IRI. Equality is exact string equality of the
// expanded form; prefix compaction is a serialization concern only.
struct Iri {
  std::string value;

  Iri() = default;
  explicit Iri(std::string v) : value(std::move(v)) {}

  bool empty() const { return value.empty(); }

  // Local fragment after the last '#', '/' or ':', used for minting
  // human-readable derived names.
  std::string local_name() const;

  friend bool operator==(const Iri& a, const Iri& b) { return a.value == b.value; }
  friend bool operator!=(const Iri& a, const Iri& b) { return a.value != b.value; }
  friend bool operator<(const Iri& a, const Iri& b) { return a.value < b.value; }
};

namespace iris {
inline const Iri& owl_thing() {
  static const Iri i{"http://www.w3.org/2002/07/owl#Thing"};
  return i;
}
inline const Iri& owl_nothing() {
  static const Iri i{"http://www.w3.org/2002/07/owl#Nothing"};
  return i;
}
}  // namespace iris

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Class expression tree. Immutable after construction; Intersections keep
// their operands in canonical sorted order so structural equality is
// insensitive to source operand order.
class Expr {
 public:
  enum class Kind { Top, Bottom, Named, Intersection, SomeValues, HasValue, Complement };

  Kind kind() const { return kind_; }
  const Iri& iri() const { return iri_; }            // Named
  const Iri& property() const { return property_; }  // SomeValues / HasValue
  const Iri& individual() const { return iri_; }     // HasValue punned target
  const std::vector<ExprPtr>& operands() const { return children_; }
  const ExprPtr& filler() const { return children_.front(); }   // SomeValues
  const ExprPtr& operand() const { return children_.front(); }  // Complement

  static ExprPtr top();
  static ExprPtr bottom();
  static ExprPtr named(Iri iri);
  static ExprPtr intersection(std::vector<ExprPtr> operands);  // throws if < 2 operands
  static ExprPtr some(Iri property, ExprPtr filler);
  static ExprPtr has_value(Iri property, Iri individual);
  static ExprPtr complement(ExprPtr operand);

 private:
  Expr(Kind k, Iri iri, Iri prop, std::vector<ExprPtr> children)
      : kind_(k), iri_(std::move(iri)), property_(std::move(prop)), children_(std::move(children)) {}

  Kind kind_;
  Iri iri_;
  Iri property_;
  std::vector<ExprPtr> children_;
};

// Total structural order; ties expression equality, intersection
// canonicalization and axiom sorting together.
int compare(const Expr& a, const Expr& b);
int compare(const ExprPtr& a, const ExprPtr& b);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Compact canonical rendering with full IRIs, independent of any prefix
// map. Stable across runs; feeds structural hashing and fresh-name minting.
std::string expr_key(const Expr& e);

enum class DeclKind { Class, Property, Individual };

struct SubClassOfAx {
  ExprPtr sub, sup;
};
struct EquivalentClassesAx {  // operands kept in canonical order
  ExprPtr a, b;
};
struct SubPropertyOfAx {
  Iri sub, sup;
};
struct SubPropertyChainAx {  // first o second -> sup; chains longer than 2 are rejected at parse
  Iri first, second, sup;
};
struct InversePropertiesAx {  // pair kept in canonical order
  Iri p, q;
};
struct DeclarationAx {
  DeclKind kind;
  Iri iri;
};
struct AnnotationAssertionAx {
  Iri property, subject, target;
};

using Axiom = std::variant<DeclarationAx, SubPropertyOfAx, SubPropertyChainAx, InversePropertiesAx,
                           SubClassOfAx, EquivalentClassesAx, AnnotationAssertionAx>;

Axiom make_equivalent(ExprPtr a, ExprPtr b);
Axiom make_inverse(Iri p, Iri q);

int compare(const Axiom& a, const Axiom& b);
bool axiom_equal(const Axiom& a, const Axiom& b);

using PrefixMap = std::map<std::string, std::string>;  // prefix -> namespace

// Ordered axiom container. Source order is preserved on parse; canonical
// (sorted, deduplicated) order is what serialization and equality use.
struct Ontology {
  std::optional<Iri> iri;
  PrefixMap prefixes;
  std::vector<Axiom> axioms;

  std::vector<Axiom> canonical_axioms() const;
  bool contains(const Axiom& ax) const;
};

// True iff the two ontologies have the same canonical axiom set (and
// ontology IRI); prefix bindings are rendering state, not content.
bool same_content(const Ontology& a, const Ontology& b);

// Set union of axioms with prefix maps reconciled. Throws PrefixConflict
// when two inputs bind one prefix to different namespaces.
Ontology merge_ontologies(std::span<const Ontology> inputs);
Ontology merge_ontologies(const Ontology& a, const Ontology& b);

// The fixed property/quality slots everything else is phrased in. All
// configurable; the defaults use symbolic OBO-style identifiers so a demo
// works out of the box and real ontology IRIs can be dropped in later.
struct Vocabulary {
  Iri inheres_in;
  Iri towards;
  Iri implies_presence_of;
  Iri part_of;
  Iri has_part;
  Iri develops_from;
  Iri lacks_all_parts_of_type;
  Iri quality_absent;
  Iri quality_present;
  Iri negates;
  Iri anatomy_root;

  // Namespace for names minted by the toolkit (absence classes, presence
  // query classes, phenotype classes).
  std::string mint_namespace = "http://purl.org/presabs/gen#";

  // When set, absence phenotype expressions get an extra
  // "inheres_in some <body>" conjunct.
  std::optional<Iri> absence_body;

  static Vocabulary defaults();

  // Throws std::invalid_argument unless the eleven slots are nonempty and
  // pairwise distinct.
  void validate() const;
};

// Prefixes assumed bound in any document: owl/rdf/rdfs/xsd plus the
// symbolic namespaces the default vocabulary and minted names live in.
const PrefixMap& builtin_prefixes();

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + what),
        line(line),
        column(col) {}
  int line;
  int column;
};

struct PrefixConflict : std::runtime_error {
  explicit PrefixConflict(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an expression outside the EL fragment reaches the reasoner;
// callers route negation through the absence pipeline instead.
struct ComplementNotSupported : std::runtime_error {
  ComplementNotSupported(std::string expression, std::string provenance)
      : std::runtime_error("class negation is not supported by the EL reasoner: " + expression +
                           " (" + provenance + ")"),
        expression(std::move(expression)),
        provenance(std::move(provenance)) {}
  std::string expression;
  std::string provenance;
};

struct UnknownIri : std::runtime_error {
  explicit UnknownIri(const Iri& iri) : std::runtime_error("unknown IRI: " + iri.value) {}
};

struct MintCollision : std::runtime_error {
  explicit MintCollision(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace presabs

#endif  // PRESABS_MODEL_HPP
