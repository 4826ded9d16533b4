// Entity-Quality annotation handling: translation to class expressions,
// the fixed property axioms, presence query classes, and the deterministic
// minting scheme shared by every generated name.

#ifndef PRESABS_EQ_HPP
#define PRESABS_EQ_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "presabs/model.hpp"

namespace presabs::eq {

struct EqAnnotation {
  Iri entity;
  Iri quality;
  std::optional<Iri> related_entity;

  friend bool operator==(const EqAnnotation& a, const EqAnnotation& b) {
    return a.entity == b.entity && a.quality == b.quality && a.related_entity == b.related_entity;
  }
  friend bool operator<(const EqAnnotation& a, const EqAnnotation& b) {
    if (a.entity != b.entity) return a.entity < b.entity;
    if (a.quality != b.quality) return a.quality < b.quality;
    return a.related_entity < b.related_entity;
  }
};

struct PhenotypeClass {
  enum class Kind { Ordinary, Absence };
  Iri iri;  // minted deterministically from the annotation
  ExprPtr expression;
  Kind kind;

  Axiom definition() const { return make_equivalent(Expr::named(iri), expression); }
};

// Deterministic derived names. Minted IRIs are <mint_namespace><tag>+<local...>
// over entity local names; two distinct sources mapping to one minted IRI
// is a hard error (MintCollision), checked by MintRegistry.
Iri mint(const Vocabulary& v, std::string_view tag, const Iri& entity);
Iri mint_phenotype(const Vocabulary& v, const EqAnnotation& a);

class MintRegistry {
 public:
  // Records minted -> source; throws MintCollision when one minted IRI is
  // claimed for two different sources.
  void claim(const Iri& minted, const std::string& source);

 private:
  std::map<std::string, std::string> claims_;
};

// EQ-to-OWL translation:
//   quality Q, no related entity:  Q and (inheres_in some E)
//   quality Q, related entity RE:  Q and (inheres_in some E) and (towards some RE)
//   quality = absent:              lacks_all_parts_of_type and (towards value E)
// The absent form takes an extra "inheres_in some <body>" conjunct when the
// vocabulary configures one. An absent quality combined with a related
// entity has no defined reading and is rejected.
PhenotypeClass translate(const EqAnnotation& a, const Vocabulary& v, MintRegistry* registry = nullptr);

// The expression absence classes are defined by, shared with the pipeline
// generator so translated absences match generated classes syntactically.
ExprPtr absence_expression(const Iri& entity, const Vocabulary& v);

// The six fixed property axioms: inheres_in / towards under
// implies_presence_of, the three implies_presence_of chains over part_of /
// has_part / develops_from, and the has_part o develops_from chain.
std::vector<Axiom> core_property_axioms(const Vocabulary& v);

struct PresenceQueries {
  std::vector<Axiom> axioms;          // PresenceOf_E EquivalentTo (implies_presence_of some E)
  std::map<Iri, Iri> presence_class;  // entity -> minted query class
};

PresenceQueries presence_query_classes(const std::set<Iri>& entities, const Vocabulary& v,
                                       MintRegistry* registry = nullptr);

}  // namespace presabs::eq

#endif  // PRESABS_EQ_HPP
