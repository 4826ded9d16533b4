// Brute-force reference implementations for validating the saturation
// engine, the negation inversion, and the matrix inference at small scale.
// Independent by rule: no shared normalization, no interning, no worklist;
// a dense global fixpoint over the subexpression universe instead.

#ifndef PRESABS_ORACLE_HPP
#define PRESABS_ORACLE_HPP

#include <map>
#include <set>

#include "presabs/matrix.hpp"

namespace presabs::oracle {

struct OracleResult {
  // Strict subsumptions between named classes, owl:Thing excluded as a
  // superclass (mirrors SubsumptionSet::named_pairs()).
  std::set<std::pair<Iri, Iri>> subsumptions;

  // Antitone inversion of the full positive closure over a negates pairing
  // (filled by invert()).
  std::set<std::pair<Iri, Iri>> inverted;

  // (taxon, entity) -> cell (filled by presence()).
  std::map<std::pair<Iri, Iri>, matrix::CellValue> cells;
};

OracleResult classify(const Ontology& o);

// From `positive` (a classified-by-oracle positive closure): for every
// has_part(X) <= has_part(Y), the pairs not_has_part(Y) <= not_has_part(X)
// and absent(Y) <= absent(X).
OracleResult invert(const OracleResult& positive, const pipeline::GeneratedNames& names);

// Graph-reachability reading of matrix inference. The anatomy must consist
// of declarations, atomic subsumptions/equivalences and told existential
// restrictions over part_of / has_part / develops_from; anything else is an
// error. Presence propagates along subclass-up, part_of, has_part and
// develops_from edges; absence along subclass-down and the inverses of
// part_of and develops_from.
OracleResult presence(const matrix::CharacterMatrix& m, const Ontology& anatomy,
                      const Vocabulary& v);

struct Diff {
  std::vector<std::pair<Iri, Iri>> only_left;
  std::vector<std::pair<Iri, Iri>> only_right;
  bool empty() const { return only_left.empty() && only_right.empty(); }
  std::string to_string(size_t limit = 20) const;
};

Diff diff(const std::set<std::pair<Iri, Iri>>& left, const std::set<std::pair<Iri, Iri>>& right);

}  // namespace presabs::oracle

#endif  // PRESABS_ORACLE_HPP
