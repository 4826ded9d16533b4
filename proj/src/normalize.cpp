#include <algorithm>

#include "presabs/reasoner.hpp"
#include "presabs/syntax.hpp"

namespace presabs::el {
namespace {

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

class Normalizer {
 public:
  explicit Normalizer(const Ontology& o) : onto_(o) {}

  NormalizedOntology run() {
    // Canonical axiom order makes fresh-name allocation independent of the
    // source ordering.
    for (const Axiom& ax : onto_.canonical_axioms()) std::visit(*this, ax);
    dedup();
    return std::move(out_);
  }

  void operator()(const DeclarationAx& ax) {
    switch (ax.kind) {
      case DeclKind::Class:
        out_.classes.intern(ax.iri);
        break;
      case DeclKind::Property:
        out_.props.intern(ax.iri);
        break;
      case DeclKind::Individual:
        atom(ax.iri);
        break;
    }
  }

  void operator()(const SubPropertyOfAx& ax) {
    out_.prop_subs.push_back({out_.props.intern(ax.sub), out_.props.intern(ax.sup)});
  }

  void operator()(const SubPropertyChainAx& ax) {
    out_.prop_chains.push_back(
        {out_.props.intern(ax.first), out_.props.intern(ax.second), out_.props.intern(ax.sup)});
  }

  void operator()(const InversePropertiesAx& ax) {
    out_.props.intern(ax.p);
    out_.props.intern(ax.q);
    out_.warnings.push_back("dropped InverseObjectProperties(" + ax.p.value + ", " + ax.q.value +
                            "): inverse properties are outside the EL fragment");
  }

  void operator()(const AnnotationAssertionAx&) {}  // non-logical

  void operator()(const SubClassOfAx& ax) { inclusion(ax.sub, ax.sup); }

  void operator()(const EquivalentClassesAx& ax) {
    inclusion(ax.a, ax.b);
    inclusion(ax.b, ax.a);
  }

 private:
  void reject_complement(const Expr& e) const {
    throw ComplementNotSupported(render_expr(e, onto_.prefixes),
                                 "normalizing " + render_axiom(current_axiom_, onto_.prefixes));
  }

  ClassId fresh(const ExprPtr& e) {
    const std::string key = expr_key(*e);
    auto it = fresh_ids_.find(key);
    if (it != fresh_ids_.end()) return it->second;
    const Iri name{"urn:presabs:x:" + hex64(fnv1a(key))};
    if (out_.classes.known(name))
      throw MintCollision("fresh-name hash collision on " + name.value + " for " + key);
    const ClassId id = out_.classes.intern(name, /*fresh=*/true);
    fresh_ids_.emplace(key, id);
    return id;
  }

  ClassId atom(const Iri& individual) {
    // Punned individuals become opaque atomic classes, one per individual,
    // deliberately distinct from the class carrying the same IRI.
    const Iri name{"urn:presabs:nominal:" + individual.value};
    return out_.classes.intern(name, /*fresh=*/true);
  }

  // Id that becomes derivable for everything provably below `e`
  // (the "detector" reading, used at negative positions).
  ClassId name_sub(const ExprPtr& e) {
    switch (e->kind()) {
      case Expr::Kind::Top:
        return kTop;
      case Expr::Kind::Bottom:
        return kBottom;
      case Expr::Kind::Named:
        return out_.classes.intern(e->iri());
      case Expr::Kind::HasValue: {
        const ClassId id = fresh(e);
        out_.exist_lefts.push_back({out_.props.intern(e->property()), atom(e->individual()), id});
        return id;
      }
      case Expr::Kind::SomeValues: {
        const ClassId id = fresh(e);
        out_.exist_lefts.push_back({out_.props.intern(e->property()), name_sub(e->filler()), id});
        return id;
      }
      case Expr::Kind::Intersection: {
        const ClassId id = fresh(e);
        conj_fold(*e, id);
        return id;
      }
      case Expr::Kind::Complement:
        reject_complement(*e);
    }
    return kTop;  // unreachable
  }

  // Id whose assertion entails `e` (the "generator" reading, used at
  // positive positions). Fillers of positive existentials need both
  // directions, so they funnel through full_name.
  ClassId full_name(const ExprPtr& e) {
    switch (e->kind()) {
      case Expr::Kind::Top:
        return kTop;
      case Expr::Kind::Bottom:
        return kBottom;
      case Expr::Kind::Named:
        return out_.classes.intern(e->iri());
      case Expr::Kind::Complement:
        reject_complement(*e);
        return kTop;
      default: {
        const auto key = expr_key(*e);
        auto it = full_named_.find(key);
        if (it != full_named_.end()) return it->second;
        const ClassId id = name_sub(e);          // e subClassOf id
        emit_sub_named(id, e);                   // id subClassOf e
        full_named_.emplace(key, id);
        return id;
      }
    }
  }

  // Normalized form of `named subClassOf e`.
  void emit_sub_named(ClassId named, const ExprPtr& e) {
    switch (e->kind()) {
      case Expr::Kind::Top:
        return;  // vacuous
      case Expr::Kind::Bottom:
        out_.atomic_subs.push_back({named, kBottom});
        return;
      case Expr::Kind::Named:
        out_.atomic_subs.push_back({named, out_.classes.intern(e->iri())});
        return;
      case Expr::Kind::Intersection:
        for (const ExprPtr& op : e->operands()) emit_sub_named(named, op);
        return;
      case Expr::Kind::SomeValues:
        out_.exist_rights.push_back(
            {named, out_.props.intern(e->property()), full_name(e->filler())});
        return;
      case Expr::Kind::HasValue:
        out_.exist_rights.push_back({named, out_.props.intern(e->property()), atom(e->individual())});
        return;
      case Expr::Kind::Complement:
        reject_complement(*e);
    }
  }

  // Fold an intersection's operands into ConjSub steps ending at `target`.
  void conj_fold(const Expr& inter, ClassId target) {
    std::vector<ClassId> ids;
    ids.reserve(inter.operands().size());
    for (const ExprPtr& op : inter.operands()) ids.push_back(name_sub(op));
    ClassId acc = ids[0];
    for (size_t i = 1; i < ids.size(); ++i) {
      ClassId step;
      if (i + 1 == ids.size()) {
        step = target;
      } else {
        // Deterministic name for the partial prefix conjunction.
        std::vector<ExprPtr> prefix(inter.operands().begin(),
                                    inter.operands().begin() + static_cast<long>(i) + 1);
        step = fresh(Expr::intersection(std::move(prefix)));
      }
      ClassId a = acc, b = ids[i];
      if (b < a) std::swap(a, b);
      out_.conj_subs.push_back({a, b, step});
      acc = step;
    }
  }

  void inclusion(const ExprPtr& sub, const ExprPtr& sup) {
    current_axiom_ = SubClassOfAx{sub, sup};
    switch (sup->kind()) {
      case Expr::Kind::Top:
        name_sub(sub);  // intern mentioned names; the inclusion is vacuous
        return;
      case Expr::Kind::Intersection:
        for (const ExprPtr& op : sup->operands()) inclusion(sub, op);
        return;
      case Expr::Kind::Complement:
        reject_complement(*sup);
        return;
      case Expr::Kind::SomeValues: {
        const ClassId lhs = name_sub(sub);
        out_.exist_rights.push_back(
            {lhs, out_.props.intern(sup->property()), full_name(sup->filler())});
        return;
      }
      case Expr::Kind::HasValue: {
        const ClassId lhs = name_sub(sub);
        out_.exist_rights.push_back(
            {lhs, out_.props.intern(sup->property()), atom(sup->individual())});
        return;
      }
      case Expr::Kind::Named:
      case Expr::Kind::Bottom: {
        const ClassId rhs =
            sup->kind() == Expr::Kind::Bottom ? kBottom : out_.classes.intern(sup->iri());
        // Top-level left structure folds straight onto the right-hand id.
        switch (sub->kind()) {
          case Expr::Kind::Intersection:
            conj_fold(*sub, rhs);
            return;
          case Expr::Kind::SomeValues:
            out_.exist_lefts.push_back(
                {out_.props.intern(sub->property()), name_sub(sub->filler()), rhs});
            return;
          case Expr::Kind::HasValue:
            out_.exist_lefts.push_back(
                {out_.props.intern(sub->property()), atom(sub->individual()), rhs});
            return;
          case Expr::Kind::Complement:
            reject_complement(*sub);
            return;
          default:
            out_.atomic_subs.push_back({name_sub(sub), rhs});
            return;
        }
      }
    }
  }

  void dedup() {
    auto sort_unique = [](auto& v, auto key) {
      std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
      v.erase(std::unique(v.begin(), v.end(),
                          [&](const auto& a, const auto& b) { return key(a) == key(b); }),
              v.end());
    };
    sort_unique(out_.atomic_subs, [](const AtomicSub& x) { return std::pair(x.sub, x.sup); });
    sort_unique(out_.conj_subs, [](const ConjSub& x) { return std::tuple(x.a1, x.a2, x.sup); });
    sort_unique(out_.exist_rights,
                [](const ExistRight& x) { return std::tuple(x.sub, x.prop, x.filler); });
    sort_unique(out_.exist_lefts,
                [](const ExistLeft& x) { return std::tuple(x.prop, x.filler, x.sup); });
    sort_unique(out_.prop_subs, [](const PropSub& x) { return std::pair(x.sub, x.sup); });
    sort_unique(out_.prop_chains,
                [](const PropChain& x) { return std::tuple(x.first, x.second, x.sup); });
  }

  const Ontology& onto_;
  NormalizedOntology out_;
  Axiom current_axiom_ = SubClassOfAx{Expr::top(), Expr::top()};
  std::unordered_map<std::string, ClassId> fresh_ids_;
  std::unordered_map<std::string, ClassId> full_named_;
};

}  // namespace

ClassTable::ClassTable() {
  intern(iris::owl_thing());
  intern(iris::owl_nothing());
}

ClassId ClassTable::intern(const Iri& iri, bool fresh) {
  auto it = ids_.find(iri.value);
  if (it != ids_.end()) return it->second;
  const ClassId id = static_cast<ClassId>(iris_.size());
  iris_.push_back(iri);
  fresh_.push_back(fresh ? 1 : 0);
  ids_.emplace(iri.value, id);
  return id;
}

ClassId ClassTable::require(const Iri& iri) const {
  auto it = ids_.find(iri.value);
  if (it == ids_.end()) throw UnknownIri(iri);
  return it->second;
}

bool ClassTable::known(const Iri& iri) const { return ids_.count(iri.value) != 0; }

std::vector<ClassId> ClassTable::named_ids() const {
  std::vector<ClassId> out;
  for (ClassId id = 0; id < iris_.size(); ++id)
    if (!fresh_[id]) out.push_back(id);
  return out;
}

PropId PropTable::intern(const Iri& iri) {
  auto it = ids_.find(iri.value);
  if (it != ids_.end()) return it->second;
  const PropId id = static_cast<PropId>(iris_.size());
  iris_.push_back(iri);
  ids_.emplace(iri.value, id);
  return id;
}

NormalizedOntology normalize(const Ontology& o) { return Normalizer(o).run(); }

}  // namespace presabs::el
