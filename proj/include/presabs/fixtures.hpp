// Bundled demo data: a small fin/limb anatomy, a few phenotype class
// definitions, and a 3-taxa x 4-character annotated matrix over it. The
// `demo` CLI subcommand writes these to disk; tests consume them directly.

#ifndef PRESABS_FIXTURES_HPP
#define PRESABS_FIXTURES_HPP

#include "presabs/eq.hpp"

namespace presabs::fixtures {

// Demo namespace helpers (the demo anatomy uses the default vocabulary).
Iri demo_class(std::string_view local);  // uberon:<local>
Iri demo_quality(std::string_view local);  // pato:<local>

const std::string& demo_anatomy_text();
Ontology demo_anatomy();

// Ordinary/relational phenotype annotations mirroring the examples the
// demo is built around (dorsal fin shape, humerus roundness, the
// trochanter/diaphysis contact).
std::vector<eq::EqAnnotation> demo_phenotype_annotations();
Ontology demo_phenotypes(const Vocabulary& v);

const std::string& toy_matrix_text();

}  // namespace presabs::fixtures

#endif  // PRESABS_FIXTURES_HPP
