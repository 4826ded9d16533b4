// The absence reasoning workflow: generate named absence / has-part /
// not-has-part classes for every anatomical entity, classify, invert the
// positive hierarchy through the negates pairing, and reclassify.

#ifndef PRESABS_PIPELINE_HPP
#define PRESABS_PIPELINE_HPP

#include <set>

#include "presabs/eq.hpp"
#include "presabs/reasoner.hpp"

namespace presabs::pipeline {

// Per-entity generated names plus the negates pairing between the
// not-has-part and has-part name sets.
struct GeneratedNames {
  std::map<Iri, Iri> absent;        // entity -> absence class
  std::map<Iri, Iri> has_part;      // entity -> (has_part some E) class
  std::map<Iri, Iri> not_has_part;  // entity -> complement name
  std::map<Iri, Iri> presence;      // entity -> presence query class

  std::map<Iri, Iri> negates;            // not_has_part(E) -> has_part(E)
  std::map<Iri, Iri> counterpart;        // has_part(E) -> not_has_part(E)
  std::map<Iri, Iri> entity_of_absent;   // absence class -> entity
  std::map<Iri, Iri> entity_of_presence; // presence class -> entity
};

struct PipelineReport {
  size_t entity_count = 0;
  size_t absence_equivalences = 0;  // step 1: two per entity
  size_t haspart_equivalences = 0;  // step 2: one per entity
  size_t negates_annotations = 0;   // step 3: one per entity
  size_t workaround_axioms = 0;     // has_part-over-part_of rewrite, one per entity
  size_t property_axioms = 0;
  size_t presence_query_axioms = 0;
  size_t phenotype_axioms = 0;
  size_t subsumptions_step4 = 0;
  size_t subsumptions_step6 = 0;
  size_t inversion_passes = 0;
  size_t inverted_axioms = 0;
  std::vector<std::string> unsatisfiable;
  std::vector<std::string> warnings;

  std::string to_text() const;  // "key: value" lines
  std::string to_json() const;
};

// All named classes of `o` subsumed by the vocabulary's anatomy root,
// per a preliminary classification. Throws UnknownIri when the root does
// not occur in `o`.
std::set<Iri> anatomy_classes(const Ontology& o, const Vocabulary& v, bool include_root = true);

struct AbsenceAxioms {
  std::vector<Axiom> axioms;  // exactly five per entity
  GeneratedNames names;
};

// For each entity E:
//   (a) absent(E)   EquivalentTo lacks_all_parts_of_type and (towards value E)
//   (b) absent(E)   EquivalentTo inheres_in some not_has_part(E)
//   (c) has_part(E) EquivalentTo has_part some E
//   (d) AnnotationAssertion(negates, not_has_part(E), has_part(E))
//   (e) has_part some (part_of some E) SubClassOf has_part(E)
AbsenceAxioms generate_absence_axioms(const std::set<Iri>& entities, const Vocabulary& v);

// Debug-only rendering of the complement semantics behind (b); not used on
// any reasoning path.
std::vector<Axiom> complement_documentation_axioms(const GeneratedNames& names, const Vocabulary& v);

// Step 5. For each pair (A negates B): the negation counterparts of B's
// direct neighbors are asserted around A, inverted; counterparts of B's own
// equivalence group become equivalences on A. Classes without counterparts
// (owl:Thing, owl:Nothing, everything ordinary) are skipped, as is any B
// already subsumed by owl:Nothing.
std::vector<Axiom> invert_negation_hierarchy(const el::Classification& c,
                                             const GeneratedNames& names);

struct PipelineOptions {
  bool fixpoint = false;      // iterate steps 4-5 until the inverted set stabilizes
  bool include_root = true;   // keep the anatomy root among the entities
};

struct PipelineResult {
  Ontology enriched;  // inputs + generated + inverted axioms
  el::Classification final;
  GeneratedNames names;
  PipelineReport report;
};

PipelineResult run(const Ontology& anatomy, const std::vector<Axiom>& phenotype_axioms,
                   const Vocabulary& v, const PipelineOptions& opts = {});

// The merged pre-classification ontology (steps 1-3 applied, nothing
// inverted yet); exposed for tests and the oracle comparison.
struct EnrichedBase {
  Ontology ontology;
  GeneratedNames names;
  std::set<Iri> entities;
};

EnrichedBase build_base(const Ontology& anatomy, const std::vector<Axiom>& phenotype_axioms,
                        const Vocabulary& v, bool include_root = true);

}  // namespace presabs::pipeline

#endif  // PRESABS_PIPELINE_HPP
