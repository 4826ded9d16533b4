// Consequence-based classifier for the EL fragment with property
// hierarchies and binary property chains. Saturation materializes every
// derivable named-class subsumption together with the existential link
// relation; classification reduces that to equivalence groups and
// non-redundant direct edges.

#ifndef PRESABS_REASONER_HPP
#define PRESABS_REASONER_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "presabs/model.hpp"

namespace presabs::el {

using ClassId = uint32_t;
using PropId = uint32_t;

inline constexpr ClassId kTop = 0;
inline constexpr ClassId kBottom = 1;

// Interning table for classes. Ids 0/1 are owl:Thing / owl:Nothing. Fresh
// ids minted during normalization (structure names, punned-individual
// atoms) are flagged so they never leak into named-class results.
class ClassTable {
 public:
  ClassTable();

  ClassId intern(const Iri& iri, bool fresh = false);
  ClassId require(const Iri& iri) const;  // throws UnknownIri
  bool known(const Iri& iri) const;
  const Iri& iri_of(ClassId id) const { return iris_[id]; }
  bool is_fresh(ClassId id) const { return fresh_[id]; }
  size_t size() const { return iris_.size(); }

  std::vector<ClassId> named_ids() const;

 private:
  std::vector<Iri> iris_;
  std::vector<char> fresh_;
  std::unordered_map<std::string, ClassId> ids_;
};

class PropTable {
 public:
  PropId intern(const Iri& iri);
  const Iri& iri_of(PropId id) const { return iris_[id]; }
  size_t size() const { return iris_.size(); }

 private:
  std::vector<Iri> iris_;
  std::unordered_map<std::string, PropId> ids_;
};

struct AtomicSub {  // A subClassOf B
  ClassId sub, sup;
};
struct ConjSub {  // A1 and A2 subClassOf B, with A1 <= A2
  ClassId a1, a2, sup;
};
struct ExistRight {  // A subClassOf (r some B)
  ClassId sub;
  PropId prop;
  ClassId filler;
};
struct ExistLeft {  // (r some A) subClassOf B
  PropId prop;
  ClassId filler;
  ClassId sup;
};
struct PropSub {  // r subPropertyOf s
  PropId sub, sup;
};
struct PropChain {  // r1 o r2 subPropertyOf s
  PropId first, second, sup;
};

// Structural transformation to EL normal form. Complex subexpressions are
// replaced by deterministic fresh names (hash of the canonical expression
// rendering), HasValue targets become one opaque atom class per punned
// individual, EquivalentClasses splits into two inclusions, and inverse
// property axioms are dropped with a warning. Complement anywhere raises
// ComplementNotSupported.
struct NormalizedOntology {
  ClassTable classes;
  PropTable props;

  std::vector<AtomicSub> atomic_subs;
  std::vector<ConjSub> conj_subs;
  std::vector<ExistRight> exist_rights;
  std::vector<ExistLeft> exist_lefts;
  std::vector<PropSub> prop_subs;
  std::vector<PropChain> prop_chains;

  std::vector<std::string> warnings;

  size_t axiom_count() const {
    return atomic_subs.size() + conj_subs.size() + exist_rights.size() + exist_lefts.size() +
           prop_subs.size() + prop_chains.size();
  }
};

NormalizedOntology normalize(const Ontology& o);

struct SaturationOptions {
  bool chain_rule = true;  // disabling breaks completeness; test hook only
};

// Saturated subsumptions plus derived existential edges.
class SubsumptionSet {
 public:
  const ClassTable& classes() const { return *classes_; }
  const PropTable& props() const { return *props_; }

  bool subsumed(ClassId sub, ClassId sup) const;
  bool is_subsumed_by(const Iri& sub, const Iri& sup) const;  // throws UnknownIri
  const std::vector<ClassId>& supers(ClassId id) const { return supers_[id]; }

  // Sorted (property, target) pairs derived for `id`.
  const std::vector<std::pair<PropId, ClassId>>& links(ClassId id) const { return links_[id]; }

  // Strict subsumptions between non-fresh classes, owl:Thing excluded as a
  // superclass. The lexicographically sorted IRI-pair view feeds the fuzz
  // comparisons; the count feeds pipeline reports.
  std::vector<std::pair<Iri, Iri>> named_pairs() const;
  size_t named_pair_count() const;

  std::vector<ClassId> unsatisfiable() const;  // named classes subsumed by owl:Nothing

 private:
  friend SubsumptionSet saturate(const NormalizedOntology&, const SaturationOptions&);
  std::shared_ptr<const ClassTable> classes_;
  std::shared_ptr<const PropTable> props_;
  std::vector<std::vector<ClassId>> supers_;  // sorted
  std::vector<std::vector<std::pair<PropId, ClassId>>> links_;  // sorted
};

SubsumptionSet saturate(const NormalizedOntology& n, const SaturationOptions& opts = {});

// Equivalence groups over named classes with non-redundant direct edges
// between group representatives. owl:Thing / owl:Nothing participate as
// ordinary nodes so re-expanding the direct edges reproduces the full
// named-class subsumption relation.
struct ClassHierarchy {
  std::map<Iri, std::vector<Iri>> groups;         // representative -> sorted members (incl. rep)
  std::map<Iri, std::vector<Iri>> direct_supers;  // representative -> sorted representatives
  std::map<Iri, std::vector<Iri>> direct_subs;
  std::map<Iri, Iri> representative;  // member -> representative
  std::vector<Iri> unsatisfiable;     // classes subsumed by owl:Nothing

  bool contains(const Iri& c) const { return representative.count(c) != 0; }
  const Iri& rep_of(const Iri& c) const;
  const std::vector<Iri>& members_of(const Iri& rep) const;

  // Reflexive-transitive closure over the direct edges, as sorted strict
  // pairs (member-level, equivalence expanded).
  std::vector<std::pair<Iri, Iri>> closure() const;

  // Direct edges and equivalences as axioms; edges up to owl:Thing are
  // left implicit.
  std::vector<Axiom> to_axioms() const;
};

struct Classification {
  SubsumptionSet subsumptions;
  ClassHierarchy hierarchy;
  std::vector<std::string> warnings;  // surfaced from normalization
};

ClassHierarchy reduce(const SubsumptionSet& s);
Classification classify(const Ontology& o);

}  // namespace presabs::el

#endif  // PRESABS_REASONER_HPP
