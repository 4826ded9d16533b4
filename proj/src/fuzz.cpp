#include <random>

#include "presabs/fuzz.hpp"
#include "presabs/pipeline.hpp"
#include "presabs/syntax.hpp"

namespace presabs::fuzz {
namespace {

Iri fuzz_class(size_t i) { return Iri{"http://purl.org/presabs/fuzz#c" + std::to_string(i)}; }
Iri anat_class(size_t i) { return Iri{"http://purl.org/presabs/fuzz#a" + std::to_string(i)}; }

std::set<std::pair<Iri, Iri>> engine_pairs(const el::SubsumptionSet& s) {
  const auto pairs = s.named_pairs();
  return {pairs.begin(), pairs.end()};
}

}  // namespace

Ontology random_ontology(uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Vocabulary v = Vocabulary::defaults();
  const std::vector<Iri> props = {v.part_of, v.has_part, v.develops_from};
  std::uniform_int_distribution<size_t> class_count(5, 30);
  const size_t n = class_count(rng);
  std::uniform_int_distribution<size_t> prop_count(1, 3);
  const size_t np = prop_count(rng);
  std::uniform_int_distribution<size_t> axiom_count(n / 2, 60);
  const size_t na = axiom_count(rng);

  auto cls = [&](auto& r) { return Expr::named(fuzz_class(std::uniform_int_distribution<size_t>(0, n - 1)(r))); };
  auto prop = [&](auto& r) { return props[std::uniform_int_distribution<size_t>(0, np - 1)(r)]; };

  Ontology o;
  o.iri = Iri{"http://purl.org/presabs/fuzz#seed" + std::to_string(seed)};
  o.prefixes = {{"fuzz", "http://purl.org/presabs/fuzz#"},
                {"ro", "http://purl.obolibrary.org/obo/ro#"}};
  for (size_t i = 0; i < n; ++i) o.axioms.push_back(DeclarationAx{DeclKind::Class, fuzz_class(i)});

  std::uniform_int_distribution<int> pick(0, 99);
  for (size_t i = 0; i < na; ++i) {
    const int roll = pick(rng);
    if (roll < 30) {
      o.axioms.push_back(SubClassOfAx{cls(rng), cls(rng)});
    } else if (roll < 50) {
      o.axioms.push_back(SubClassOfAx{cls(rng), Expr::some(prop(rng), cls(rng))});
    } else if (roll < 60) {
      o.axioms.push_back(SubClassOfAx{Expr::some(prop(rng), cls(rng)), cls(rng)});
    } else if (roll < 68) {
      o.axioms.push_back(SubClassOfAx{cls(rng), Expr::intersection({cls(rng), cls(rng)})});
    } else if (roll < 76) {
      o.axioms.push_back(SubClassOfAx{Expr::intersection({cls(rng), cls(rng)}), cls(rng)});
    } else if (roll < 82) {
      o.axioms.push_back(make_equivalent(cls(rng), Expr::some(prop(rng), cls(rng))));
    } else if (roll < 87) {
      o.axioms.push_back(
          make_equivalent(cls(rng), Expr::intersection({cls(rng), Expr::some(prop(rng), cls(rng))})));
    } else if (roll < 92) {
      // hasValue punning against a class IRI reused as an individual
      const ExprPtr target = cls(rng);
      o.axioms.push_back(
          make_equivalent(cls(rng), Expr::has_value(prop(rng), target->iri())));
    } else if (roll < 95) {
      o.axioms.push_back(SubPropertyOfAx{prop(rng), prop(rng)});
    } else if (roll < 98) {
      o.axioms.push_back(SubPropertyChainAx{prop(rng), prop(rng), prop(rng)});
    } else {
      o.axioms.push_back(SubClassOfAx{cls(rng), Expr::bottom()});
    }
  }
  return o;
}

Ontology random_anatomy(uint64_t seed, const Vocabulary& v) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> class_count(5, 30);
  const size_t n = class_count(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Ontology o;
  o.iri = Iri{"http://purl.org/presabs/fuzz#anatomy" + std::to_string(seed)};
  o.prefixes = {{"fuzz", "http://purl.org/presabs/fuzz#"},
                {"ro", "http://purl.obolibrary.org/obo/ro#"},
                {"uberon", "http://purl.obolibrary.org/obo/uberon#"}};
  auto name = [&](size_t i) { return i == 0 ? v.anatomy_root : anat_class(i); };
  o.axioms.push_back(DeclarationAx{DeclKind::Class, v.anatomy_root});
  for (size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<size_t> parent(0, i - 1);
    o.axioms.push_back(SubClassOfAx{Expr::named(name(i)), Expr::named(name(parent(rng)))});
    if (unit(rng) < 0.35)
      o.axioms.push_back(
          SubClassOfAx{Expr::named(name(i)), Expr::some(v.part_of, Expr::named(name(parent(rng))))});
    if (unit(rng) < 0.20)
      o.axioms.push_back(SubClassOfAx{Expr::named(name(i)),
                                      Expr::some(v.develops_from, Expr::named(name(parent(rng))))});
    if (i >= 2 && unit(rng) < 0.10) {
      // occasional equivalence cycle to exercise group inversion
      std::uniform_int_distribution<size_t> other(1, i - 1);
      const size_t j = other(rng);
      o.axioms.push_back(SubClassOfAx{Expr::named(name(i)), Expr::named(name(j))});
      o.axioms.push_back(SubClassOfAx{Expr::named(name(j)), Expr::named(name(i))});
    }
  }
  return o;
}

Ontology synthetic_anatomy(size_t classes, double part_of_fraction, double develops_from_fraction,
                           const Vocabulary& v, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Ontology o;
  o.iri = Iri{"http://purl.org/presabs/fuzz#scale"};
  o.prefixes = {{"fuzz", "http://purl.org/presabs/fuzz#"},
                {"ro", "http://purl.obolibrary.org/obo/ro#"},
                {"uberon", "http://purl.obolibrary.org/obo/uberon#"}};
  auto name = [&](size_t i) { return i == 0 ? v.anatomy_root : anat_class(i); };
  o.axioms.push_back(DeclarationAx{DeclKind::Class, v.anatomy_root});
  for (size_t i = 1; i < classes; ++i) {
    std::uniform_int_distribution<size_t> earlier(0, i - 1);
    o.axioms.push_back(SubClassOfAx{Expr::named(name(i)), Expr::named(name(earlier(rng)))});
    if (unit(rng) < part_of_fraction)
      o.axioms.push_back(
          SubClassOfAx{Expr::named(name(i)), Expr::some(v.part_of, Expr::named(name(earlier(rng))))});
    if (unit(rng) < develops_from_fraction)
      o.axioms.push_back(SubClassOfAx{Expr::named(name(i)),
                                      Expr::some(v.develops_from, Expr::named(name(earlier(rng))))});
  }
  return o;
}

matrix::CharacterMatrix random_matrix(uint64_t seed, const Ontology& anatomy, const Vocabulary& v) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::set<Iri> entity_set = pipeline::anatomy_classes(anatomy, v);
  const std::vector<Iri> entities(entity_set.begin(), entity_set.end());
  auto pick_entity = [&] {
    return entities[std::uniform_int_distribution<size_t>(0, entities.size() - 1)(rng)];
  };
  const Iri shape{"http://purl.obolibrary.org/obo/pato#round"};
  const Iri relational{"http://purl.obolibrary.org/obo/pato#fused_with"};

  matrix::CharacterMatrix m;
  std::uniform_int_distribution<size_t> taxon_count(2, 4), char_count(2, 5), state_count(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const size_t nt = taxon_count(rng), nc = char_count(rng);
  for (size_t t = 0; t < nt; ++t)
    m.taxa.push_back({Iri{"http://purl.org/presabs/fuzz/taxa#t" + std::to_string(t)},
                      "taxon " + std::to_string(t)});
  for (size_t c = 0; c < nc; ++c) {
    matrix::Character character;
    character.id = "c" + std::to_string(c);
    character.label = "character " + std::to_string(c);
    const size_t ns = state_count(rng);
    for (size_t s = 0; s < ns; ++s) {
      matrix::CharacterState state;
      state.id = character.id + "s" + std::to_string(s);
      state.label = "state " + std::to_string(s);
      const double roll = unit(rng);
      eq::EqAnnotation a;
      a.entity = pick_entity();
      if (roll < 0.3) {
        a.quality = v.quality_present;
      } else if (roll < 0.6) {
        a.quality = v.quality_absent;
      } else if (roll < 0.8) {
        a.quality = shape;
      } else {
        a.quality = relational;
        a.related_entity = pick_entity();
      }
      state.annotations.push_back(std::move(a));
      character.states.push_back(std::move(state));
    }
    m.characters.push_back(std::move(character));
  }
  for (const matrix::Taxon& taxon : m.taxa)
    for (const matrix::Character& character : m.characters) {
      if (unit(rng) > 0.7) continue;
      std::uniform_int_distribution<size_t> pick(0, character.states.size() - 1);
      m.cells.push_back({taxon.id, character.id, character.states[pick(rng)].id});
    }
  return m;
}

RunResult compare_classification(uint64_t first_seed, size_t count) {
  RunResult result;
  for (uint64_t seed = first_seed; seed < first_seed + count; ++seed) {
    ++result.seeds_run;
    const Ontology o = random_ontology(seed);
    const auto engine = engine_pairs(el::classify(o).subsumptions);
    const auto reference = oracle::classify(o).subsumptions;
    const oracle::Diff d = oracle::diff(engine, reference);
    if (!d.empty())
      result.failures.push_back({seed, "classification disagrees (engine vs oracle):\n" + d.to_string()});
  }
  return result;
}

RunResult compare_inversion(uint64_t first_seed, size_t count, bool fixpoint) {
  RunResult result;
  const Vocabulary v = Vocabulary::defaults();
  for (uint64_t seed = first_seed; seed < first_seed + count; ++seed) {
    ++result.seeds_run;
    const Ontology anatomy = random_anatomy(seed, v);
    pipeline::PipelineOptions opts;
    opts.fixpoint = fixpoint;
    const pipeline::PipelineResult run = pipeline::run(anatomy, {}, v, opts);
    const auto engine = engine_pairs(run.final.subsumptions);

    const pipeline::EnrichedBase base = pipeline::build_base(anatomy, {}, v);
    oracle::OracleResult positive = oracle::classify(base.ontology);
    const oracle::OracleResult inverted = oracle::invert(positive, base.names);
    std::set<std::pair<Iri, Iri>> expected = inverted.subsumptions;
    expected.insert(inverted.inverted.begin(), inverted.inverted.end());

    const oracle::Diff d = oracle::diff(engine, expected);
    if (!d.empty())
      result.failures.push_back(
          {seed, "final hierarchy disagrees with oracle inversion of the positive closure:\n" +
                     d.to_string()});
  }
  return result;
}

RunResult compare_matrix(uint64_t first_seed, size_t count) {
  RunResult result;
  const Vocabulary v = Vocabulary::defaults();
  for (uint64_t seed = first_seed; seed < first_seed + count; ++seed) {
    ++result.seeds_run;
    const Ontology anatomy = random_anatomy(seed, v);
    const matrix::CharacterMatrix m = random_matrix(seed, anatomy, v);
    const matrix::InferResult engine = matrix::infer(m, anatomy, v);
    const oracle::OracleResult reference = oracle::presence(m, anatomy, v);
    if (reference.cells.size() != engine.matrix.taxa.size() * engine.matrix.entities.size()) {
      result.failures.push_back({seed, "column sets differ between engine and oracle"});
      continue;
    }
    for (const auto& [key, expected] : reference.cells) {
      const matrix::CellValue got = engine.matrix.at(key.first, key.second);
      if (got != expected) {
        result.failures.push_back({seed, "cell (" + key.first.value + ", " + key.second.value +
                                             "): engine=" + matrix::cell_token(got) +
                                             " oracle=" + matrix::cell_token(expected)});
        break;
      }
    }
  }
  return result;
}

RunResult check_roundtrip(uint64_t first_seed, size_t count) {
  RunResult result;
  for (uint64_t seed = first_seed; seed < first_seed + count; ++seed) {
    ++result.seeds_run;
    const Ontology o = random_ontology(seed);
    const Ontology back = parse_ontology(serialize_ontology(o));
    if (!same_content(o, back))
      result.failures.push_back({seed, "parse(serialize(o)) differs from o"});
  }
  return result;
}

}  // namespace presabs::fuzz
