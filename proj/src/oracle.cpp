#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "presabs/oracle.hpp"
#include "presabs/syntax.hpp"

namespace presabs::oracle {
namespace {

constexpr const char* kAtomScheme = "urn:presabs-oracle:atom:";

Iri atom_iri(const Iri& individual) { return Iri{kAtomScheme + individual.value}; }

bool is_atom(const Iri& iri) { return iri.value.rfind(kAtomScheme, 0) == 0; }

// The oracle's only preprocessing: punned hasValue targets become opaque
// atoms so they behave like plain classes in the dense fixpoint.
ExprPtr rewrite(const ExprPtr& e) {
  switch (e->kind()) {
    case Expr::Kind::HasValue:
      return Expr::some(e->property(), Expr::named(atom_iri(e->individual())));
    case Expr::Kind::SomeValues:
      return Expr::some(e->property(), rewrite(e->filler()));
    case Expr::Kind::Intersection: {
      std::vector<ExprPtr> ops;
      for (const ExprPtr& op : e->operands()) ops.push_back(rewrite(op));
      return Expr::intersection(std::move(ops));
    }
    case Expr::Kind::Complement:
      throw ComplementNotSupported(expr_key(*e->operand()), "oracle classification");
    default:
      return e;
  }
}

struct Bits {
  std::vector<uint64_t> w;
  explicit Bits(size_t n = 0) : w((n + 63) / 64, 0) {}
  bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool set(size_t i) {
    uint64_t& word = w[i >> 6];
    const uint64_t mask = 1ull << (i & 63);
    if (word & mask) return false;
    word |= mask;
    return true;
  }
  bool merge(const Bits& other) {
    bool changed = false;
    for (size_t i = 0; i < w.size(); ++i) {
      const uint64_t next = w[i] | other.w[i];
      if (next != w[i]) {
        w[i] = next;
        changed = true;
      }
    }
    return changed;
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (size_t wi = 0; wi < w.size(); ++wi) {
      uint64_t word = w[wi];
      while (word) {
        const int bit = __builtin_ctzll(word);
        fn(wi * 64 + static_cast<size_t>(bit));
        word &= word - 1;
      }
    }
  }
};

class DenseReasoner {
 public:
  explicit DenseReasoner(const Ontology& o) {
    top_ = add(Expr::top());
    bottom_ = add(Expr::bottom());
    for (const Axiom& ax : o.canonical_axioms()) std::visit(*this, ax);
    const size_t n = exprs_.size();
    sub_.assign(n, Bits(n));
    for (size_t i = 0; i < n; ++i) {
      sub_[i].set(i);
      sub_[i].set(static_cast<size_t>(top_));
    }
    for (const auto& [a, b] : told_subs_) sub_[static_cast<size_t>(a)].set(static_cast<size_t>(b));
    close_properties();
    for (int p = 0; p < static_cast<int>(props_.size()); ++p) links_[p].assign(n, Bits(n));
  }

  void operator()(const DeclarationAx& ax) {
    if (ax.kind == DeclKind::Class) add(Expr::named(ax.iri));
    if (ax.kind == DeclKind::Property) prop(ax.iri);
    if (ax.kind == DeclKind::Individual) add(Expr::named(atom_iri(ax.iri)));
  }
  void operator()(const SubClassOfAx& ax) {
    told_subs_.emplace_back(add(rewrite(ax.sub)), add(rewrite(ax.sup)));
  }
  void operator()(const EquivalentClassesAx& ax) {
    const int a = add(rewrite(ax.a)), b = add(rewrite(ax.b));
    told_subs_.emplace_back(a, b);
    told_subs_.emplace_back(b, a);
  }
  void operator()(const SubPropertyOfAx& ax) {
    told_prop_subs_.emplace_back(prop(ax.sub), prop(ax.sup));
  }
  void operator()(const SubPropertyChainAx& ax) {
    chains_.push_back({prop(ax.first), prop(ax.second), prop(ax.sup)});
  }
  void operator()(const InversePropertiesAx& ax) {
    prop(ax.p);
    prop(ax.q);  // unusable in this fragment; recorded only so IRIs resolve
  }
  void operator()(const AnnotationAssertionAx&) {}

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      changed |= transitivity();
      changed |= conjunctions();
      changed |= existential_intro();
      changed |= property_closure();
      changed |= chain_closure();
      changed |= existential_elim();
      changed |= bottom_rule();
    }
  }

  OracleResult result() const {
    OracleResult out;
    const size_t n = exprs_.size();
    for (size_t i = 0; i < n; ++i) {
      if (!named(i)) continue;
      sub_[i].for_each([&](size_t j) {
        if (j == i || static_cast<int>(j) == top_ || !named(j)) return;
        out.subsumptions.emplace(iri_of(i), iri_of(j));
      });
    }
    return out;
  }

 private:
  int add(const ExprPtr& e) {
    const std::string key = expr_key(*e);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(exprs_.size());
    exprs_.push_back(e);
    index_.emplace(key, id);
    // Subexpressions join the universe too; they are what the rules match.
    if (e->kind() == Expr::Kind::SomeValues) {
      prop(e->property());
      add(e->filler());
    } else if (e->kind() == Expr::Kind::Intersection) {
      for (const ExprPtr& op : e->operands()) add(op);
    }
    return id;
  }

  int prop(const Iri& iri) {
    auto it = prop_index_.find(iri.value);
    if (it != prop_index_.end()) return it->second;
    const int id = static_cast<int>(props_.size());
    props_.push_back(iri);
    prop_index_.emplace(iri.value, id);
    return id;
  }

  bool named(size_t i) const {
    const Expr& e = *exprs_[i];
    if (e.kind() == Expr::Kind::Top || e.kind() == Expr::Kind::Bottom) return true;
    return e.kind() == Expr::Kind::Named && !is_atom(e.iri());
  }

  Iri iri_of(size_t i) const {
    const Expr& e = *exprs_[i];
    if (e.kind() == Expr::Kind::Top) return iris::owl_thing();
    if (e.kind() == Expr::Kind::Bottom) return iris::owl_nothing();
    return e.iri();
  }

  void close_properties() {
    const size_t np = props_.size();
    prop_closure_.assign(np, std::vector<char>(np, 0));
    for (size_t r = 0; r < np; ++r) prop_closure_[r][r] = 1;
    for (const auto& [r, s] : told_prop_subs_) prop_closure_[static_cast<size_t>(r)][static_cast<size_t>(s)] = 1;
    for (size_t k = 0; k < np; ++k)
      for (size_t i = 0; i < np; ++i)
        if (prop_closure_[i][k])
          for (size_t j = 0; j < np; ++j)
            if (prop_closure_[k][j]) prop_closure_[i][j] = 1;
  }

  bool transitivity() {
    bool changed = false;
    for (size_t i = 0; i < exprs_.size(); ++i) {
      bool local = true;
      while (local) {
        local = false;
        std::vector<size_t> supers;
        sub_[i].for_each([&](size_t j) { supers.push_back(j); });
        for (size_t j : supers)
          if (j != i) local |= sub_[i].merge(sub_[j]);
        changed |= local;
      }
    }
    return changed;
  }

  bool conjunctions() {
    bool changed = false;
    for (size_t c = 0; c < exprs_.size(); ++c) {
      if (exprs_[c]->kind() != Expr::Kind::Intersection) continue;
      std::vector<size_t> ops;
      for (const ExprPtr& op : exprs_[c]->operands())
        ops.push_back(static_cast<size_t>(index_.at(expr_key(*op))));
      for (size_t i = 0; i < exprs_.size(); ++i) {
        if (sub_[i].test(c)) {
          for (size_t op : ops) changed |= sub_[i].set(op);
        } else {
          bool all = true;
          for (size_t op : ops) all = all && sub_[i].test(op);
          if (all) changed |= sub_[i].set(c);
        }
      }
    }
    return changed;
  }

  bool existential_intro() {
    bool changed = false;
    for (size_t s = 0; s < exprs_.size(); ++s) {
      if (exprs_[s]->kind() != Expr::Kind::SomeValues) continue;
      const int r = prop_index_.at(exprs_[s]->property().value);
      const size_t filler = static_cast<size_t>(index_.at(expr_key(*exprs_[s]->filler())));
      for (size_t i = 0; i < exprs_.size(); ++i)
        if (sub_[i].test(s)) changed |= links_[r][i].set(filler);
    }
    return changed;
  }

  bool property_closure() {
    bool changed = false;
    for (size_t r = 0; r < props_.size(); ++r)
      for (size_t s = 0; s < props_.size(); ++s) {
        if (r == s || !prop_closure_[r][s]) continue;
        auto& from = links_[static_cast<int>(r)];
        auto& to = links_[static_cast<int>(s)];
        for (size_t i = 0; i < exprs_.size(); ++i) changed |= to[i].merge(from[i]);
      }
    return changed;
  }

  bool chain_closure() {
    bool changed = false;
    for (const auto& [r1, r2, s] : chains_) {
      auto& first = links_[r1];
      auto& second = links_[r2];
      auto& target = links_[s];
      for (size_t i = 0; i < exprs_.size(); ++i) {
        bool any = false;
        first[i].for_each([&](size_t j) { any |= target[i].merge(second[j]); });
        changed |= any;
      }
    }
    return changed;
  }

  bool existential_elim() {
    bool changed = false;
    for (size_t s = 0; s < exprs_.size(); ++s) {
      if (exprs_[s]->kind() != Expr::Kind::SomeValues) continue;
      const int r = prop_index_.at(exprs_[s]->property().value);
      const size_t filler = static_cast<size_t>(index_.at(expr_key(*exprs_[s]->filler())));
      const auto& rows = links_[r];
      for (size_t i = 0; i < exprs_.size(); ++i) {
        if (sub_[i].test(s)) continue;
        bool hit = false;
        rows[i].for_each([&](size_t j) { hit = hit || sub_[j].test(filler); });
        if (hit) changed |= sub_[i].set(s);
      }
    }
    return changed;
  }

  bool bottom_rule() {
    bool changed = false;
    const size_t bot = static_cast<size_t>(bottom_);
    for (auto& [_, rows] : links_)
      for (size_t i = 0; i < exprs_.size(); ++i) {
        bool hit = false;
        rows[i].for_each([&](size_t j) { hit = hit || sub_[j].test(bot); });
        if (hit) changed |= sub_[i].set(bot);
      }
    return changed;
  }

  std::vector<ExprPtr> exprs_;
  std::unordered_map<std::string, int> index_;
  std::vector<Iri> props_;
  std::unordered_map<std::string, int> prop_index_;
  std::vector<std::pair<int, int>> told_subs_;
  std::vector<std::pair<int, int>> told_prop_subs_;
  struct Chain {
    int r1, r2, s;
  };
  std::vector<Chain> chains_;
  std::vector<std::vector<char>> prop_closure_;
  int top_ = 0, bottom_ = 0;

  std::vector<Bits> sub_;
  std::map<int, std::vector<Bits>> links_;
};

}  // namespace

OracleResult classify(const Ontology& o) {
  DenseReasoner r(o);
  r.run();
  return r.result();
}

OracleResult invert(const OracleResult& positive, const pipeline::GeneratedNames& names) {
  OracleResult out;
  out.subsumptions = positive.subsumptions;
  // Entity lookup keyed by the generated has_part class.
  std::map<Iri, Iri> entity_of_haspart;
  for (const auto& [entity, haspart] : names.has_part) entity_of_haspart.emplace(haspart, entity);
  for (const auto& [sub, sup] : positive.subsumptions) {
    auto x = entity_of_haspart.find(sub);
    auto y = entity_of_haspart.find(sup);
    if (x == entity_of_haspart.end() || y == entity_of_haspart.end()) continue;
    // has_part(X) <= has_part(Y) inverts to not_has_part(Y) <= not_has_part(X),
    // and the absence classes defined over them mirror that.
    out.inverted.emplace(names.not_has_part.at(y->second), names.not_has_part.at(x->second));
    out.inverted.emplace(names.absent.at(y->second), names.absent.at(x->second));
  }
  return out;
}

OracleResult presence(const matrix::CharacterMatrix& m, const Ontology& anatomy,
                      const Vocabulary& v) {
  // Told edge lists, one per relation the restricted shape allows.
  std::map<Iri, std::vector<Iri>> up, down, part_of, part_of_inv, has_part, dev_from, dev_from_inv;
  std::set<Iri> classes;
  const auto touch = [&](const Iri& c) {
    classes.insert(c);
    up[c];
  };
  const auto shape_error = [&](const Axiom& ax) {
    throw matrix::MatrixError("anatomy outside the restricted oracle shape: " +
                      render_axiom(ax, anatomy.prefixes));
  };
  for (const Axiom& ax : anatomy.canonical_axioms()) {
    if (std::holds_alternative<DeclarationAx>(ax) || std::holds_alternative<InversePropertiesAx>(ax) ||
        std::holds_alternative<AnnotationAssertionAx>(ax) ||
        std::holds_alternative<SubPropertyOfAx>(ax) || std::holds_alternative<SubPropertyChainAx>(ax)) {
      if (const auto* decl = std::get_if<DeclarationAx>(&ax); decl && decl->kind == DeclKind::Class)
        touch(decl->iri);
      continue;
    }
    std::vector<std::pair<ExprPtr, ExprPtr>> inclusions;
    if (const auto* sc = std::get_if<SubClassOfAx>(&ax)) {
      inclusions.emplace_back(sc->sub, sc->sup);
    } else if (const auto* eqv = std::get_if<EquivalentClassesAx>(&ax)) {
      if (eqv->a->kind() != Expr::Kind::Named || eqv->b->kind() != Expr::Kind::Named)
        shape_error(ax);
      inclusions.emplace_back(eqv->a, eqv->b);
      inclusions.emplace_back(eqv->b, eqv->a);
    }
    for (const auto& [sub, sup] : inclusions) {
      if (sub->kind() != Expr::Kind::Named) shape_error(ax);
      const Iri& s = sub->iri();
      touch(s);
      if (sup->kind() == Expr::Kind::Named) {
        touch(sup->iri());
        up[s].push_back(sup->iri());
        down[sup->iri()].push_back(s);
      } else if (sup->kind() == Expr::Kind::SomeValues &&
                 sup->filler()->kind() == Expr::Kind::Named) {
        const Iri& target = sup->filler()->iri();
        touch(target);
        if (sup->property() == v.part_of) {
          part_of[s].push_back(target);
          part_of_inv[target].push_back(s);
        } else if (sup->property() == v.has_part) {
          has_part[s].push_back(target);
        } else if (sup->property() == v.develops_from) {
          dev_from[s].push_back(target);
          dev_from_inv[target].push_back(s);
        } else {
          shape_error(ax);
        }
      } else {
        shape_error(ax);
      }
    }
  }
  if (!classes.count(v.anatomy_root)) throw UnknownIri(v.anatomy_root);

  const auto reach = [&](const std::vector<Iri>& seeds,
                         const std::vector<const std::map<Iri, std::vector<Iri>>*>& graphs) {
    std::set<Iri> seen(seeds.begin(), seeds.end());
    std::deque<Iri> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
      const Iri cur = queue.front();
      queue.pop_front();
      for (const auto* g : graphs)
        if (auto it = g->find(cur); it != g->end())
          for (const Iri& next : it->second)
            if (seen.insert(next).second) queue.push_back(next);
    }
    return seen;
  };

  // Columns: classes whose subclass-up closure hits the root.
  std::set<Iri> columns;
  for (const Iri& c : classes)
    if (reach({c}, {&up}).count(v.anatomy_root)) columns.insert(c);

  std::map<std::pair<std::string, std::string>, const matrix::CharacterState*> state_index;
  for (const matrix::Character& c : m.characters)
    for (const matrix::CharacterState& s : c.states) state_index.emplace(std::pair(c.id, s.id), &s);

  OracleResult out;
  for (const matrix::Taxon& taxon : m.taxa) {
    std::vector<Iri> present_seeds, absent_seeds;
    std::set<Iri> asserted_present, asserted_absent;
    for (const matrix::Cell& cell : m.cells) {
      if (cell.taxon != taxon.id) continue;
      const matrix::CharacterState* s = state_index.at({cell.character, cell.state});
      for (const eq::EqAnnotation& a : s->annotations) {
        if (a.quality == v.quality_absent) {
          absent_seeds.push_back(a.entity);
          asserted_absent.insert(a.entity);
        } else {
          present_seeds.push_back(a.entity);
          if (a.related_entity) present_seeds.push_back(*a.related_entity);
          if (a.quality == v.quality_present) asserted_present.insert(a.entity);
        }
      }
    }
    const std::set<Iri> present = reach(present_seeds, {&up, &part_of, &has_part, &dev_from});
    const std::set<Iri> absent = reach(absent_seeds, {&down, &part_of_inv, &dev_from_inv});
    for (const Iri& entity : columns) {
      matrix::CellValue value = matrix::CellValue::Unknown;
      const bool p = present.count(entity), a = absent.count(entity);
      if (p && a)
        value = matrix::CellValue::Conflict;
      else if (p)
        value = asserted_present.count(entity) ? matrix::CellValue::AssertedPresent
                                               : matrix::CellValue::InferredPresent;
      else if (a)
        value = asserted_absent.count(entity) ? matrix::CellValue::AssertedAbsent
                                              : matrix::CellValue::InferredAbsent;
      out.cells.emplace(std::pair(taxon.id, entity), value);
    }
  }
  return out;
}

Diff diff(const std::set<std::pair<Iri, Iri>>& left, const std::set<std::pair<Iri, Iri>>& right) {
  Diff d;
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(),
                      std::back_inserter(d.only_left));
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(),
                      std::back_inserter(d.only_right));
  return d;
}

std::string Diff::to_string(size_t limit) const {
  std::ostringstream out;
  auto dump = [&](const char* side, const std::vector<std::pair<Iri, Iri>>& pairs) {
    if (pairs.empty()) return;
    out << pairs.size() << " pair(s) " << side << ":\n";
    for (size_t i = 0; i < std::min(limit, pairs.size()); ++i)
      out << "  " << pairs[i].first.value << " <= " << pairs[i].second.value << "\n";
    if (pairs.size() > limit) out << "  ...\n";
  };
  dump("only in left", only_left);
  dump("only in right", only_right);
  return out.str();
}

}  // namespace presabs::oracle
