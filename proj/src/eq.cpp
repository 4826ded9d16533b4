#include "presabs/eq.hpp"

namespace presabs::eq {

Iri mint(const Vocabulary& v, std::string_view tag, const Iri& entity) {
  return Iri{v.mint_namespace + std::string(tag) + "+" + entity.local_name()};
}

Iri mint_phenotype(const Vocabulary& v, const EqAnnotation& a) {
  std::string name = "phenotype+" + a.entity.local_name() + "+" + a.quality.local_name();
  if (a.related_entity) name += "+" + a.related_entity->local_name();
  return Iri{v.mint_namespace + name};
}

void MintRegistry::claim(const Iri& minted, const std::string& source) {
  auto [it, inserted] = claims_.emplace(minted.value, source);
  if (!inserted && it->second != source)
    throw MintCollision("minted name " + minted.value + " claimed for both " + it->second +
                        " and " + source);
}

ExprPtr absence_expression(const Iri& entity, const Vocabulary& v) {
  std::vector<ExprPtr> ops;
  ops.push_back(Expr::named(v.lacks_all_parts_of_type));
  ops.push_back(Expr::has_value(v.towards, entity));
  if (v.absence_body) ops.push_back(Expr::some(v.inheres_in, Expr::named(*v.absence_body)));
  return Expr::intersection(std::move(ops));
}

PhenotypeClass translate(const EqAnnotation& a, const Vocabulary& v, MintRegistry* registry) {
  PhenotypeClass out;
  out.iri = mint_phenotype(v, a);
  if (registry) {
    std::string source = "annotation(" + a.entity.value + ", " + a.quality.value;
    if (a.related_entity) source += ", " + a.related_entity->value;
    registry->claim(out.iri, source + ")");
  }
  if (a.quality == v.quality_absent) {
    if (a.related_entity)
      throw std::invalid_argument("annotation of " + a.entity.value +
                                  ": quality 'absent' cannot take a related entity");
    out.kind = PhenotypeClass::Kind::Absence;
    out.expression = absence_expression(a.entity, v);
    return out;
  }
  out.kind = PhenotypeClass::Kind::Ordinary;
  std::vector<ExprPtr> ops;
  ops.push_back(Expr::named(a.quality));
  ops.push_back(Expr::some(v.inheres_in, Expr::named(a.entity)));
  if (a.related_entity) ops.push_back(Expr::some(v.towards, Expr::named(*a.related_entity)));
  out.expression = Expr::intersection(std::move(ops));
  return out;
}

std::vector<Axiom> core_property_axioms(const Vocabulary& v) {
  return {
      SubPropertyOfAx{v.inheres_in, v.implies_presence_of},
      SubPropertyOfAx{v.towards, v.implies_presence_of},
      SubPropertyChainAx{v.implies_presence_of, v.part_of, v.implies_presence_of},
      SubPropertyChainAx{v.implies_presence_of, v.has_part, v.implies_presence_of},
      SubPropertyChainAx{v.implies_presence_of, v.develops_from, v.implies_presence_of},
      SubPropertyChainAx{v.has_part, v.develops_from, v.has_part},
  };
}

PresenceQueries presence_query_classes(const std::set<Iri>& entities, const Vocabulary& v,
                                       MintRegistry* registry) {
  PresenceQueries out;
  for (const Iri& entity : entities) {
    const Iri name = mint(v, "presence_of", entity);
    if (registry) registry->claim(name, "presence(" + entity.value + ")");
    out.axioms.push_back(
        make_equivalent(Expr::named(name), Expr::some(v.implies_presence_of, Expr::named(entity))));
    out.presence_class.emplace(entity, name);
  }
  return out;
}

}  // namespace presabs::eq
