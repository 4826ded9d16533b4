#include <algorithm>
#include <deque>
#include <unordered_set>

#include "presabs/reasoner.hpp"

namespace presabs::el {
namespace {

// Per-class neighbor lists bucketed by property; property fan-out is tiny
// (a handful of relations) so a flat vector beats a map.
struct PropBuckets {
  std::vector<std::pair<PropId, std::vector<ClassId>>> buckets;

  std::vector<ClassId>& at(PropId p) {
    for (auto& [prop, v] : buckets)
      if (prop == p) return v;
    buckets.emplace_back(p, std::vector<ClassId>{});
    return buckets.back().second;
  }
  const std::vector<ClassId>* find(PropId p) const {
    for (const auto& [prop, v] : buckets)
      if (prop == p) return &v;
    return nullptr;
  }
};

struct WorkItem {
  enum class Kind : uint8_t { Sub, Link } kind;
  ClassId a;
  ClassId b;
  PropId prop;
};

struct Saturator {
  Saturator(const NormalizedOntology& n, const SaturationOptions& opts) : n_(n), opts_(opts) {
    const size_t nc = n.classes.size();
    subs_.resize(nc);
    out_links_.resize(nc);
    in_links_.resize(nc);
    index();
    for (ClassId c = 0; c < nc; ++c) {
      add_sub(c, c);
      add_sub(c, kTop);
    }
  }

  void run() {
    while (!queue_.empty()) {
      const WorkItem item = queue_.front();
      queue_.pop_front();
      if (item.kind == WorkItem::Kind::Sub)
        process_sub(item.a, item.b);
      else
        process_link(item.a, item.prop, item.b);
    }
  }

  void index() {
    for (const AtomicSub& ax : n_.atomic_subs) atomic_by_lhs_[ax.sub].push_back(ax.sup);
    for (const ConjSub& ax : n_.conj_subs) {
      conj_by_operand_[ax.a1].emplace_back(ax.a2, ax.sup);
      if (ax.a1 != ax.a2) conj_by_operand_[ax.a2].emplace_back(ax.a1, ax.sup);
    }
    for (const ExistRight& ax : n_.exist_rights)
      existright_by_lhs_[ax.sub].emplace_back(ax.prop, ax.filler);
    is_el_filler_.assign(n_.classes.size(), 0);
    for (const ExistLeft& ax : n_.exist_lefts) {
      existleft_by_filler_[ax.filler].emplace_back(ax.prop, ax.sup);
      is_el_filler_[ax.filler] = 1;
    }
    for (const PropSub& ax : n_.prop_subs) propsub_by_sub_[ax.sub].push_back(ax.sup);
    for (const PropChain& ax : n_.prop_chains) {
      chain_by_first_[ax.first].emplace_back(ax.second, ax.sup);
      chain_by_second_[ax.second].emplace_back(ax.first, ax.sup);
    }
  }

  void add_sub(ClassId a, ClassId b) {
    if (subs_[a].insert(b).second) queue_.push_back({WorkItem::Kind::Sub, a, b, 0});
  }

  void add_link(ClassId a, PropId r, ClassId b) {
    const uint64_t key = (static_cast<uint64_t>(a) << 40) | (static_cast<uint64_t>(r) << 24) | b;
    if (!link_seen_.insert(key).second) return;
    out_links_[a].at(r).push_back(b);
    in_links_[b].at(r).push_back(a);
    queue_.push_back({WorkItem::Kind::Link, a, b, r});
  }

  template <class Map, class Fn>
  void for_entries(const Map& m, ClassId key, Fn&& fn) {
    auto it = m.find(key);
    if (it == m.end()) return;
    for (const auto& entry : it->second) fn(entry);
  }

  void process_sub(ClassId a, ClassId b) {
    for_entries(atomic_by_lhs_, b, [&](ClassId c) { add_sub(a, c); });
    for_entries(conj_by_operand_, b, [&](const std::pair<ClassId, ClassId>& e) {
      if (subs_[a].count(e.first)) add_sub(a, e.second);
    });
    for_entries(existright_by_lhs_, b, [&](const std::pair<PropId, ClassId>& e) {
      add_link(a, e.first, e.second);
    });
    if (is_el_filler_[b]) {
      for_entries(existleft_by_filler_, b, [&](const std::pair<PropId, ClassId>& e) {
        if (const auto* srcs = in_links_[a].find(e.first))
          for (ClassId src : *srcs) add_sub(src, e.second);
      });
    }
    if (b == kBottom)
      for (const auto& [prop, srcs] : in_links_[a].buckets)
        for (ClassId src : srcs) add_sub(src, kBottom);
  }

  void process_link(ClassId a, PropId r, ClassId b) {
    for (ClassId c : subs_[b]) {
      if (!is_el_filler_[c]) continue;
      for_entries(existleft_by_filler_, c, [&](const std::pair<PropId, ClassId>& e) {
        if (e.first == r) add_sub(a, e.second);
      });
    }
    if (subs_[b].count(kBottom)) add_sub(a, kBottom);
    for_entries(propsub_by_sub_, r, [&](PropId s) { add_link(a, s, b); });
    if (!opts_.chain_rule) return;
    for_entries(chain_by_first_, r, [&](const std::pair<PropId, PropId>& e) {
      if (const auto* targets = out_links_[b].find(e.first))
        for (ClassId c : *targets) add_link(a, e.second, c);
    });
    for_entries(chain_by_second_, r, [&](const std::pair<PropId, PropId>& e) {
      if (const auto* srcs = in_links_[a].find(e.first))
        for (ClassId src : *srcs) add_link(src, e.second, b);
    });
  }

  const NormalizedOntology& n_;
  SaturationOptions opts_;

  std::unordered_map<ClassId, std::vector<ClassId>> atomic_by_lhs_;
  std::unordered_map<ClassId, std::vector<std::pair<ClassId, ClassId>>> conj_by_operand_;
  std::unordered_map<ClassId, std::vector<std::pair<PropId, ClassId>>> existright_by_lhs_;
  std::unordered_map<ClassId, std::vector<std::pair<PropId, ClassId>>> existleft_by_filler_;
  std::unordered_map<PropId, std::vector<PropId>> propsub_by_sub_;
  std::unordered_map<PropId, std::vector<std::pair<PropId, PropId>>> chain_by_first_;
  std::unordered_map<PropId, std::vector<std::pair<PropId, PropId>>> chain_by_second_;
  std::vector<char> is_el_filler_;

  std::vector<std::unordered_set<ClassId>> subs_;
  std::vector<PropBuckets> out_links_;
  std::vector<PropBuckets> in_links_;
  std::unordered_set<uint64_t> link_seen_;
  std::deque<WorkItem> queue_;
};

}  // namespace

bool SubsumptionSet::subsumed(ClassId sub, ClassId sup) const {
  const auto& v = supers_[sub];
  return std::binary_search(v.begin(), v.end(), sup);
}

bool SubsumptionSet::is_subsumed_by(const Iri& sub, const Iri& sup) const {
  return subsumed(classes_->require(sub), classes_->require(sup));
}

std::vector<std::pair<Iri, Iri>> SubsumptionSet::named_pairs() const {
  std::vector<std::pair<Iri, Iri>> out;
  for (ClassId a = 0; a < supers_.size(); ++a) {
    if (classes_->is_fresh(a)) continue;
    for (ClassId b : supers_[a]) {
      if (b == a || b == kTop || classes_->is_fresh(b)) continue;
      out.emplace_back(classes_->iri_of(a), classes_->iri_of(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

size_t SubsumptionSet::named_pair_count() const {
  size_t n = 0;
  for (ClassId a = 0; a < supers_.size(); ++a) {
    if (classes_->is_fresh(a)) continue;
    for (ClassId b : supers_[a])
      if (b != a && b != kTop && !classes_->is_fresh(b)) ++n;
  }
  return n;
}

std::vector<ClassId> SubsumptionSet::unsatisfiable() const {
  std::vector<ClassId> out;
  for (ClassId a = 0; a < supers_.size(); ++a)
    if (a != kBottom && !classes_->is_fresh(a) && subsumed(a, kBottom)) out.push_back(a);
  return out;
}

SubsumptionSet saturate(const NormalizedOntology& n, const SaturationOptions& opts) {
  Saturator s(n, opts);
  s.run();
  SubsumptionSet out;
  out.classes_ = std::make_shared<ClassTable>(n.classes);
  out.props_ = std::make_shared<PropTable>(n.props);
  out.supers_.resize(s.subs_.size());
  out.links_.resize(s.subs_.size());
  for (ClassId c = 0; c < s.subs_.size(); ++c) {
    out.supers_[c].assign(s.subs_[c].begin(), s.subs_[c].end());
    std::sort(out.supers_[c].begin(), out.supers_[c].end());
    auto& links = out.links_[c];
    for (const auto& [prop, targets] : s.out_links_[c].buckets)
      for (ClassId t : targets) links.emplace_back(prop, t);
    std::sort(links.begin(), links.end());
  }
  return out;
}

}  // namespace presabs::el
