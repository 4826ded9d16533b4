#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "presabs/pipeline.hpp"

namespace presabs::pipeline {

std::string PipelineReport::to_text() const {
  std::ostringstream out;
  out << "entities: " << entity_count << "\n";
  out << "absence_equivalences: " << absence_equivalences << "\n";
  out << "haspart_equivalences: " << haspart_equivalences << "\n";
  out << "negates_annotations: " << negates_annotations << "\n";
  out << "workaround_axioms: " << workaround_axioms << "\n";
  out << "property_axioms: " << property_axioms << "\n";
  out << "presence_query_axioms: " << presence_query_axioms << "\n";
  out << "phenotype_axioms: " << phenotype_axioms << "\n";
  out << "subsumptions_step4: " << subsumptions_step4 << "\n";
  out << "subsumptions_step6: " << subsumptions_step6 << "\n";
  out << "inversion_passes: " << inversion_passes << "\n";
  out << "inverted_axioms: " << inverted_axioms << "\n";
  for (const std::string& u : unsatisfiable) out << "unsatisfiable: " << u << "\n";
  for (const std::string& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string PipelineReport::to_json() const {
  nlohmann::ordered_json j;
  j["entities"] = entity_count;
  j["absence_equivalences"] = absence_equivalences;
  j["haspart_equivalences"] = haspart_equivalences;
  j["negates_annotations"] = negates_annotations;
  j["workaround_axioms"] = workaround_axioms;
  j["property_axioms"] = property_axioms;
  j["presence_query_axioms"] = presence_query_axioms;
  j["phenotype_axioms"] = phenotype_axioms;
  j["subsumptions_step4"] = subsumptions_step4;
  j["subsumptions_step6"] = subsumptions_step6;
  j["inversion_passes"] = inversion_passes;
  j["inverted_axioms"] = inverted_axioms;
  j["unsatisfiable"] = unsatisfiable;
  j["warnings"] = warnings;
  return j.dump(2) + "\n";
}

std::set<Iri> anatomy_classes(const Ontology& o, const Vocabulary& v, bool include_root) {
  const el::Classification c = el::classify(o);
  const el::ClassTable& table = c.subsumptions.classes();
  const el::ClassId root = table.require(v.anatomy_root);  // throws UnknownIri
  std::set<Iri> out;
  for (el::ClassId id : table.named_ids()) {
    if (id == el::kTop || id == el::kBottom) continue;
    if (!c.subsumptions.subsumed(id, root)) continue;
    if (!include_root && id == root) continue;
    out.insert(table.iri_of(id));
  }
  return out;
}

AbsenceAxioms generate_absence_axioms(const std::set<Iri>& entities, const Vocabulary& v) {
  if (entities.empty()) throw std::invalid_argument("no anatomical entities to generate for");
  AbsenceAxioms out;
  eq::MintRegistry registry;
  for (const Iri& entity : entities) {
    const Iri absent = eq::mint(v, "absent", entity);
    const Iri haspart = eq::mint(v, "has_part", entity);
    const Iri nothaspart = eq::mint(v, "not_has_part", entity);
    for (const Iri* minted : {&absent, &haspart, &nothaspart})
      registry.claim(*minted, entity.value);

    out.axioms.push_back(make_equivalent(Expr::named(absent), eq::absence_expression(entity, v)));
    out.axioms.push_back(
        make_equivalent(Expr::named(absent), Expr::some(v.inheres_in, Expr::named(nothaspart))));
    out.axioms.push_back(
        make_equivalent(Expr::named(haspart), Expr::some(v.has_part, Expr::named(entity))));
    out.axioms.push_back(AnnotationAssertionAx{v.negates, nothaspart, haspart});
    out.axioms.push_back(
        SubClassOfAx{Expr::some(v.has_part, Expr::some(v.part_of, Expr::named(entity))),
                     Expr::named(haspart)});

    out.names.absent.emplace(entity, absent);
    out.names.has_part.emplace(entity, haspart);
    out.names.not_has_part.emplace(entity, nothaspart);
    out.names.negates.emplace(nothaspart, haspart);
    out.names.counterpart.emplace(haspart, nothaspart);
    out.names.entity_of_absent.emplace(absent, entity);
  }
  return out;
}

std::vector<Axiom> complement_documentation_axioms(const GeneratedNames& names,
                                                   const Vocabulary& v) {
  std::vector<Axiom> out;
  for (const auto& [entity, nothaspart] : names.not_has_part)
    out.push_back(make_equivalent(Expr::named(nothaspart),
                                  Expr::complement(Expr::some(v.has_part, Expr::named(entity)))));
  return out;
}

std::vector<Axiom> invert_negation_hierarchy(const el::Classification& c,
                                             const GeneratedNames& names) {
  std::vector<Axiom> out;
  const auto counterpart_of = [&](const Iri& cls) -> const Iri* {
    auto it = names.counterpart.find(cls);
    return it == names.counterpart.end() ? nullptr : &it->second;
  };
  for (const auto& [not_name, haspart_name] : names.negates) {
    if (!c.hierarchy.contains(haspart_name)) continue;
    if (c.subsumptions.is_subsumed_by(haspart_name, iris::owl_nothing())) continue;  // reported, not inverted
    const Iri& rep = c.hierarchy.rep_of(haspart_name);
    for (const Iri& member : c.hierarchy.members_of(rep)) {
      if (member == haspart_name) continue;
      if (const Iri* m = counterpart_of(member)) {
        out.push_back(SubClassOfAx{Expr::named(*m), Expr::named(not_name)});
        out.push_back(SubClassOfAx{Expr::named(not_name), Expr::named(*m)});
      }
    }
    for (const Iri& sup : c.hierarchy.direct_supers.at(rep))
      for (const Iri& member : c.hierarchy.members_of(sup))
        if (const Iri* m = counterpart_of(member))
          out.push_back(SubClassOfAx{Expr::named(*m), Expr::named(not_name)});
    for (const Iri& sub : c.hierarchy.direct_subs.at(rep))
      for (const Iri& member : c.hierarchy.members_of(sub))
        if (const Iri* m = counterpart_of(member))
          out.push_back(SubClassOfAx{Expr::named(not_name), Expr::named(*m)});
  }
  std::sort(out.begin(), out.end(), [](const Axiom& a, const Axiom& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Axiom& a, const Axiom& b) { return axiom_equal(a, b); }),
            out.end());
  return out;
}

EnrichedBase build_base(const Ontology& anatomy, const std::vector<Axiom>& phenotype_axioms,
                        const Vocabulary& v, bool include_root) {
  v.validate();
  EnrichedBase out;
  out.entities = anatomy_classes(anatomy, v, include_root);
  AbsenceAxioms generated = generate_absence_axioms(out.entities, v);
  eq::PresenceQueries queries = eq::presence_query_classes(out.entities, v);
  out.names = std::move(generated.names);
  out.names.presence = queries.presence_class;
  for (const auto& [entity, presence] : out.names.presence)
    out.names.entity_of_presence.emplace(presence, entity);

  Ontology additions;
  additions.axioms = std::move(generated.axioms);
  const std::vector<Axiom> property_axioms = eq::core_property_axioms(v);
  for (const std::vector<Axiom>* more :
       std::initializer_list<const std::vector<Axiom>*>{&property_axioms, &queries.axioms,
                                                        &phenotype_axioms})
    additions.axioms.insert(additions.axioms.end(), more->begin(), more->end());
  auto gen_binding = anatomy.prefixes.find("gen");
  if (gen_binding == anatomy.prefixes.end() || gen_binding->second == v.mint_namespace)
    additions.prefixes.emplace("gen", v.mint_namespace);
  out.ontology = merge_ontologies(anatomy, additions);
  return out;
}

PipelineResult run(const Ontology& anatomy, const std::vector<Axiom>& phenotype_axioms,
                   const Vocabulary& v, const PipelineOptions& opts) {
  PipelineResult result;
  EnrichedBase base = build_base(anatomy, phenotype_axioms, v, opts.include_root);
  result.names = base.names;

  PipelineReport& report = result.report;
  report.entity_count = base.entities.size();
  report.absence_equivalences = 2 * base.entities.size();
  report.haspart_equivalences = base.entities.size();
  report.negates_annotations = base.entities.size();
  report.workaround_axioms = base.entities.size();
  report.property_axioms = 6;
  report.presence_query_axioms = base.entities.size();
  report.phenotype_axioms = phenotype_axioms.size();

  Ontology current = std::move(base.ontology);
  el::Classification cls = el::classify(current);
  report.subsumptions_step4 = cls.subsumptions.named_pair_count();
  report.warnings = cls.warnings;
  for (const auto& [entity, haspart] : base.names.has_part)
    if (cls.subsumptions.is_subsumed_by(haspart, iris::owl_nothing()))
      report.warnings.push_back("skipped inversion for " + entity.value +
                                ": its has_part class is unsatisfiable");

  const auto axiom_less = [](const Axiom& a, const Axiom& b) { return compare(a, b) < 0; };
  std::vector<Axiom> all_inverted;
  for (;;) {
    std::vector<Axiom> inverted = invert_negation_hierarchy(cls, base.names);
    ++report.inversion_passes;
    const std::vector<Axiom> have = current.canonical_axioms();
    std::vector<Axiom> added;
    for (const Axiom& ax : inverted)
      if (!std::binary_search(have.begin(), have.end(), ax, axiom_less)) added.push_back(ax);
    all_inverted.insert(all_inverted.end(), inverted.begin(), inverted.end());
    if (added.empty()) break;
    Ontology extra;
    extra.axioms = std::move(added);
    current = merge_ontologies(current, extra);
    cls = el::classify(current);
    if (!opts.fixpoint) break;
  }
  std::sort(all_inverted.begin(), all_inverted.end(),
            [](const Axiom& a, const Axiom& b) { return compare(a, b) < 0; });
  all_inverted.erase(std::unique(all_inverted.begin(), all_inverted.end(),
                                 [](const Axiom& a, const Axiom& b) { return axiom_equal(a, b); }),
                     all_inverted.end());
  report.inverted_axioms = all_inverted.size();
  report.subsumptions_step6 = cls.subsumptions.named_pair_count();
  for (const Iri& u : cls.hierarchy.unsatisfiable) report.unsatisfiable.push_back(u.value);
  std::sort(report.warnings.begin(), report.warnings.end());
  report.warnings.erase(std::unique(report.warnings.begin(), report.warnings.end()),
                        report.warnings.end());

  result.enriched = std::move(current);
  result.final = std::move(cls);
  return result;
}

}  // namespace presabs::pipeline
