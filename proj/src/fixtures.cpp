#include "presabs/fixtures.hpp"

#include "presabs/syntax.hpp"

namespace presabs::fixtures {

Iri demo_class(std::string_view local) {
  return Iri{"http://purl.obolibrary.org/obo/uberon#" + std::string(local)};
}

Iri demo_quality(std::string_view local) {
  return Iri{"http://purl.obolibrary.org/obo/pato#" + std::string(local)};
}

const std::string& demo_anatomy_text() {
  static const std::string text = R"(# Demo anatomy: fins, limbs, and the skeletal bits the toolkit's
# examples revolve around.
Prefix(uberon:=<http://purl.obolibrary.org/obo/uberon#>)
Prefix(ro:=<http://purl.obolibrary.org/obo/ro#>)
Ontology(<http://purl.org/presabs/demo/anatomy>
Declaration(Class(uberon:anatomical_structure))
Declaration(ObjectProperty(ro:part_of))
Declaration(ObjectProperty(ro:has_part))
Declaration(ObjectProperty(ro:develops_from))
SubClassOf(uberon:body uberon:anatomical_structure)
SubClassOf(uberon:fin uberon:anatomical_structure)
SubClassOf(uberon:dorsal_fin uberon:fin)
SubClassOf(uberon:pectoral_fin uberon:fin)
SubClassOf(uberon:caudal_fin uberon:fin)
SubClassOf(uberon:limb_bud uberon:anatomical_structure)
SubClassOf(uberon:limb uberon:anatomical_structure)
SubClassOf(uberon:limb ObjectSomeValuesFrom(ro:develops_from uberon:limb_bud))
SubClassOf(uberon:forelimb uberon:limb)
SubClassOf(uberon:humerus uberon:anatomical_structure)
SubClassOf(uberon:humerus ObjectSomeValuesFrom(ro:part_of uberon:forelimb))
SubClassOf(uberon:vertebra uberon:anatomical_structure)
SubClassOf(uberon:pelvic_girdle uberon:anatomical_structure)
SubClassOf(uberon:internal_trochanter uberon:anatomical_structure)
SubClassOf(uberon:diaphysis_of_femur uberon:anatomical_structure)
# Real anatomy ontologies declare the partonomy inverses; the EL engine
# drops this with a warning and relies on the generated axioms instead.
InverseObjectProperties(ro:has_part ro:part_of)
)
)";
  return text;
}

Ontology demo_anatomy() { return parse_ontology(demo_anatomy_text()); }

std::vector<eq::EqAnnotation> demo_phenotype_annotations() {
  return {
      {demo_class("dorsal_fin"), demo_quality("oblong"), std::nullopt},
      {demo_class("humerus"), demo_quality("round"), std::nullopt},
      {demo_class("internal_trochanter"), demo_quality("in_contact_with"),
       demo_class("diaphysis_of_femur")},
      {demo_class("dorsal_fin"), demo_quality("absent"), std::nullopt},
  };
}

Ontology demo_phenotypes(const Vocabulary& v) {
  Ontology o;
  o.iri = Iri{"http://purl.org/presabs/demo/phenotypes"};
  o.prefixes = {
      {"uberon", "http://purl.obolibrary.org/obo/uberon#"},
      {"pato", "http://purl.obolibrary.org/obo/pato#"},
      {"ro", "http://purl.obolibrary.org/obo/ro#"},
      {"gen", v.mint_namespace},
  };
  eq::MintRegistry registry;
  for (const eq::EqAnnotation& a : demo_phenotype_annotations())
    o.axioms.push_back(eq::translate(a, v, &registry).definition());
  return o;
}

const std::string& toy_matrix_text() {
  static const std::string text = R"({
  "prefixes": {
    "uberon": "http://purl.obolibrary.org/obo/uberon#",
    "pato": "http://purl.obolibrary.org/obo/pato#",
    "tax": "http://purl.org/presabs/demo/taxa#"
  },
  "taxa": [
    {"id": "tax:t1", "label": "Taxon alpha"},
    {"id": "tax:t2", "label": "Taxon beta"},
    {"id": "tax:t3", "label": "Taxon gamma"}
  ],
  "characters": [
    {
      "id": "c1", "label": "Dorsal fin",
      "states": [
        {"id": "c1s0", "label": "present", "phenotypes": [
          {"entity": "uberon:dorsal_fin", "quality": "pato:present"}
        ]},
        {"id": "c1s1", "label": "absent", "phenotypes": [
          {"entity": "uberon:dorsal_fin", "quality": "pato:absent"}
        ]}
      ]
    },
    {
      "id": "c2", "label": "Humerus shape",
      "states": [
        {"id": "c2s0", "label": "round", "phenotypes": [
          {"entity": "uberon:humerus", "quality": "pato:round"}
        ]},
        {"id": "c2s1", "label": "bifurcated", "phenotypes": [
          {"entity": "uberon:humerus", "quality": "pato:bifurcated"}
        ]}
      ]
    },
    {
      "id": "c3", "label": "Limb bud",
      "states": [
        {"id": "c3s0", "label": "present", "phenotypes": [
          {"entity": "uberon:limb_bud", "quality": "pato:present"}
        ]},
        {"id": "c3s1", "label": "absent", "phenotypes": [
          {"entity": "uberon:limb_bud", "quality": "pato:absent"}
        ]}
      ]
    },
    {
      "id": "c4", "label": "Vertebra fusion",
      "states": [
        {"id": "c4s0", "label": "fused to pelvic girdle", "phenotypes": [
          {"entity": "uberon:vertebra", "quality": "pato:fused_with",
           "related_entity": "uberon:pelvic_girdle"}
        ]},
        {"id": "c4s1", "label": "unfused", "phenotypes": [
          {"entity": "uberon:vertebra", "quality": "pato:unfused"}
        ]}
      ]
    }
  ],
  "cells": [
    {"taxon": "tax:t1", "character": "c1", "state": "c1s1"},
    {"taxon": "tax:t1", "character": "c2", "state": "c2s0"},
    {"taxon": "tax:t1", "character": "c3", "state": "c3s0"},
    {"taxon": "tax:t1", "character": "c4", "state": "c4s0"},
    {"taxon": "tax:t2", "character": "c1", "state": "c1s0"},
    {"taxon": "tax:t2", "character": "c2", "state": "c2s1"},
    {"taxon": "tax:t2", "character": "c3", "state": "c3s1"},
    {"taxon": "tax:t3", "character": "c1", "state": "c1s1"},
    {"taxon": "tax:t3", "character": "c3", "state": "c3s1"}
  ]
}
)";
  return text;
}

}  // namespace presabs::fixtures
