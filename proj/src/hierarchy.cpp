#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "presabs/reasoner.hpp"

namespace presabs::el {

const Iri& ClassHierarchy::rep_of(const Iri& c) const {
  auto it = representative.find(c);
  if (it == representative.end()) throw UnknownIri(c);
  return it->second;
}

const std::vector<Iri>& ClassHierarchy::members_of(const Iri& rep) const {
  auto it = groups.find(rep);
  if (it == groups.end()) throw UnknownIri(rep);
  return it->second;
}

std::vector<std::pair<Iri, Iri>> ClassHierarchy::closure() const {
  // Reachable representative sets, memoized bottom-up.
  std::unordered_map<std::string, std::vector<const Iri*>> reach;
  std::vector<const Iri*> order;
  std::unordered_map<std::string, int> state;  // 0 new, 1 visiting, 2 done
  std::vector<const Iri*> stack;
  for (const auto& [rep, _] : groups) stack.push_back(&rep);
  while (!stack.empty()) {
    const Iri* rep = stack.back();
    int& st = state[rep->value];
    if (st == 2) {
      stack.pop_back();
      continue;
    }
    if (st == 0) {
      st = 1;
      for (const Iri& sup : direct_supers.at(*rep))
        if (state[sup.value] != 2) stack.push_back(&sup);
      continue;
    }
    st = 2;
    stack.pop_back();
    std::unordered_set<std::string> seen;
    std::vector<const Iri*> rs;
    for (const Iri& sup : direct_supers.at(*rep)) {
      if (seen.insert(sup.value).second) rs.push_back(&groups.find(sup)->first);
      for (const Iri* r : reach.at(sup.value))
        if (seen.insert(r->value).second) rs.push_back(r);
    }
    reach.emplace(rep->value, std::move(rs));
  }

  std::vector<std::pair<Iri, Iri>> out;
  for (const auto& [rep, members] : groups) {
    std::vector<const Iri*> sup_members;
    for (const Iri& m : members) sup_members.push_back(&m);
    for (const Iri* r : reach.at(rep.value))
      for (const Iri& m : groups.at(*r)) sup_members.push_back(&m);
    for (const Iri& x : members)
      for (const Iri* y : sup_members)
        if (x != *y && *y != iris::owl_thing()) out.emplace_back(x, *y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Axiom> ClassHierarchy::to_axioms() const {
  std::vector<Axiom> out;
  for (const auto& [rep, members] : groups) {
    for (const Iri& m : members)
      if (m != rep) out.push_back(make_equivalent(Expr::named(m), Expr::named(rep)));
    for (const Iri& sup : direct_supers.at(rep))
      if (sup != iris::owl_thing())
        out.push_back(SubClassOfAx{Expr::named(rep), Expr::named(sup)});
  }
  std::sort(out.begin(), out.end(), [](const Axiom& a, const Axiom& b) { return compare(a, b) < 0; });
  return out;
}

ClassHierarchy reduce(const SubsumptionSet& s) {
  const ClassTable& table = s.classes();
  const std::vector<ClassId> named = table.named_ids();

  // Equivalence groups: mutual subsumption, lexicographically least IRI as
  // representative.
  std::unordered_map<ClassId, ClassId> rep_of;
  std::unordered_map<ClassId, std::vector<ClassId>> members;
  for (ClassId a : named) {
    ClassId rep = a;
    for (ClassId b : s.supers(a)) {
      if (b == a || table.is_fresh(b)) continue;
      if (s.subsumed(b, a) && table.iri_of(b) < table.iri_of(rep)) rep = b;
    }
    rep_of[a] = rep;
    members[rep].push_back(a);
  }

  // Strict superclass sets at representative level.
  std::vector<ClassId> reps;
  for (const auto& [rep, _] : members) reps.push_back(rep);
  std::unordered_map<ClassId, std::vector<ClassId>> strict;
  for (ClassId rep : reps) {
    std::vector<ClassId>& sup = strict[rep];
    for (ClassId b : s.supers(rep)) {
      if (table.is_fresh(b)) continue;
      const ClassId br = rep_of.at(b);
      if (br != rep) sup.push_back(br);
    }
    std::sort(sup.begin(), sup.end());
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
  }

  // Transitive reduction: an edge is direct unless implied through another
  // strict superclass.
  ClassHierarchy h;
  for (ClassId rep : reps) {
    const std::vector<ClassId>& sup = strict.at(rep);
    std::unordered_set<ClassId> redundant;
    std::unordered_set<ClassId> local(sup.begin(), sup.end());
    for (ClassId t : sup) {
      const std::vector<ClassId>& above = strict.at(t);
      if (above.size() <= sup.size()) {
        for (ClassId y : above)
          if (local.count(y)) redundant.insert(y);
      } else {
        for (ClassId y : sup)
          if (std::binary_search(above.begin(), above.end(), y)) redundant.insert(y);
      }
    }
    const Iri& rep_iri = table.iri_of(rep);
    std::vector<Iri> direct;
    for (ClassId t : sup)
      if (!redundant.count(t)) direct.push_back(table.iri_of(t));
    std::sort(direct.begin(), direct.end());
    h.direct_supers[rep_iri] = std::move(direct);

    std::vector<Iri> group;
    for (ClassId m : members.at(rep)) group.push_back(table.iri_of(m));
    std::sort(group.begin(), group.end());
    for (const Iri& m : group) h.representative.emplace(m, rep_iri);
    h.groups[rep_iri] = std::move(group);
  }
  for (const auto& [rep, _] : h.groups) h.direct_subs[rep];
  for (const auto& [rep, sups] : h.direct_supers)
    for (const Iri& sup : sups) h.direct_subs[sup].push_back(rep);
  for (auto& [_, subs] : h.direct_subs) std::sort(subs.begin(), subs.end());

  for (ClassId c : s.unsatisfiable()) h.unsatisfiable.push_back(table.iri_of(c));
  std::sort(h.unsatisfiable.begin(), h.unsatisfiable.end());
  return h;
}

Classification classify(const Ontology& o) {
  NormalizedOntology n = normalize(o);
  Classification result{saturate(n), {}, std::move(n.warnings)};
  result.hierarchy = reduce(result.subsumptions);
  return result;
}

}  // namespace presabs::el
