// Seeded random ontologies and the oracle comparison harnesses behind the
// `fuzz` subcommand and the acceptance suite.

#ifndef PRESABS_FUZZ_HPP
#define PRESABS_FUZZ_HPP

#include <cstdint>

#include "presabs/oracle.hpp"

namespace presabs::fuzz {

// Random ontology within the supported fragment: 5-30 classes, up to 3
// properties (part_of / has_part / develops_from), up to 60 axioms weighted
// toward subsumptions and existentials, occasional conjunctions, hasValue
// punning, property hierarchy/chain axioms and a rare owl:Nothing.
Ontology random_ontology(uint64_t seed);

// Random anatomy for the inversion comparison: every class reaches the
// vocabulary root through atomic subsumptions; told part_of/develops_from
// existentials and occasional equivalence cycles on top.
Ontology random_anatomy(uint64_t seed, const Vocabulary& v);

// Synthetic anatomy for the scale run: a subclass tree with the given
// fraction of part_of / develops_from told existentials.
Ontology synthetic_anatomy(size_t classes, double part_of_fraction, double develops_from_fraction,
                           const Vocabulary& v, uint64_t seed);

struct SeedFailure {
  uint64_t seed;
  std::string detail;
};

struct RunResult {
  size_t seeds_run = 0;
  std::vector<SeedFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Random annotated character matrix over the given anatomy: 2-4 taxa, a
// few characters with present/absent/shape/relational states, ~70% of the
// cells filled.
matrix::CharacterMatrix random_matrix(uint64_t seed, const Ontology& anatomy, const Vocabulary& v);

// Engine vs oracle named-class subsumptions, seed by seed.
RunResult compare_classification(uint64_t first_seed, size_t count);

// Full pipeline vs oracle antitone inversion over random anatomies.
RunResult compare_inversion(uint64_t first_seed, size_t count, bool fixpoint = false);

// infer() vs the reachability oracle, cell for cell, over random
// anatomies and random matrices.
RunResult compare_matrix(uint64_t first_seed, size_t count);

// parse(serialize(o)) == o over random ontologies.
RunResult check_roundtrip(uint64_t first_seed, size_t count);

}  // namespace presabs::fuzz

#endif  // PRESABS_FUZZ_HPP
