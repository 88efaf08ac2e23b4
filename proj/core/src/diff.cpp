#include "coevo/diff.hpp"

#include <algorithm>
#include <tuple>

#include "coevo/errors.hpp"

namespace coevo {

EntryKind kind_of(const DiffEntry& e) { return static_cast<EntryKind>(e.index()); }

std::string_view to_string(EntryKind k) {
  switch (k) {
    case EntryKind::AddedClass: return "AddedClass";
    case EntryKind::DeletedClass: return "DeletedClass";
    case EntryKind::ChangedClass: return "ChangedClass";
    case EntryKind::AddedAttribute: return "AddedAttribute";
    case EntryKind::DeletedAttribute: return "DeletedAttribute";
    case EntryKind::ChangedAttribute: return "ChangedAttribute";
    case EntryKind::AddedReference: return "AddedReference";
    case EntryKind::DeletedReference: return "DeletedReference";
    case EntryKind::ChangedReference: return "ChangedReference";
  }
  return "AddedClass";
}

std::optional<EntryKind> entry_kind_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(EntryKind::ChangedReference); ++i) {
    const auto k = static_cast<EntryKind>(i);
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::optional<std::string> element_id(const DiffEntry& e) {
  return std::visit([](const auto& x) { return x.element.id; }, e);
}

std::string describe(const DiffEntry& e) {
  const std::string kind(to_string(kind_of(e)));
  return std::visit(
      overloaded{
          [&](const AddedClass& x) {
            return kind + " " + x.element.name + (x.element.is_abstract ? " (abstract)" : "");
          },
          [&](const DeletedClass& x) { return kind + " " + x.element.name; },
          [&](const ChangedClass& x) {
            return kind + " " + x.element.name + " -> " + x.updated.name;
          },
          [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (requires { x.new_owner; }) {
              return kind + " " + x.owner + "." + x.element.name + " -> " + x.new_owner + "." +
                     x.updated.name;
            } else {
              (void)sizeof(T);
              return kind + " " + x.owner + "." + x.element.name;
            }
          },
      },
      e);
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& x : a) common += b.count(x);
  const std::size_t unite = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(unite);
}

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

namespace {

bool both_have_ids(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  return a.has_value() && b.has_value();
}

std::string translate(const std::map<std::string, std::string>& classes, const std::string& n) {
  auto it = classes.find(n);
  return it == classes.end() ? n : it->second;
}

struct FeatureView {
  FeatureKey key;
  const std::optional<std::string>* id;
  const AttributeDef* attribute = nullptr;
  const ReferenceDef* reference = nullptr;
};

std::vector<FeatureView> features_of(const Metamodel& mm, bool references) {
  std::vector<FeatureView> out;
  for (const auto& c : mm.classes) {
    if (references) {
      for (const auto& r : c.references) out.push_back({{c.name, r.name, true}, &r.id, nullptr, &r});
    } else {
      for (const auto& a : c.attributes)
        out.push_back({{c.name, a.name, false}, &a.id, &a, nullptr});
    }
  }
  // Heuristic passes are greedy; a fixed order keeps them independent of
  // declaration order.
  std::sort(out.begin(), out.end(),
            [](const FeatureView& a, const FeatureView& b) { return a.key < b.key; });
  return out;
}

std::set<std::string> class_tokens(const ClassDef& c,
                                   const std::map<std::string, std::string>* translation) {
  std::set<std::string> t;
  for (const auto& a : c.attributes) t.insert("f:" + a.name);
  for (const auto& r : c.references) t.insert("f:" + r.name);
  for (const auto& s : c.super_types)
    t.insert("s:" + (translation != nullptr ? translate(*translation, s) : s));
  return t;
}

std::string bound_token(const UpperBound& u) {
  return u ? std::to_string(*u) : std::string("*");
}

std::set<std::string> feature_tokens(const FeatureView& f,
                                     const std::map<std::string, std::string>* translation) {
  if (f.attribute != nullptr) return {"t:" + std::string(to_string(f.attribute->type))};
  const ReferenceDef& r = *f.reference;
  const std::string target = translation != nullptr ? translate(*translation, r.target) : r.target;
  return {"t:" + target, std::string("c:") + (r.containment ? "1" : "0"),
          "l:" + std::to_string(r.lower_bound), "u:" + bound_token(r.upper_bound)};
}

void match_features(const Metamodel& old_mm, const Metamodel& new_mm, bool references,
                    Correspondence& corr) {
  const auto olds = features_of(old_mm, references);
  const auto news = features_of(new_mm, references);
  std::set<FeatureKey> new_taken;
  auto old_taken = [&](const FeatureKey& k) { return corr.features.contains(k); };

  // 1. Stable ids.
  for (const auto& o : olds) {
    if (!o.id->has_value()) continue;
    for (const auto& n : news) {
      if (n.id->has_value() && **n.id == **o.id && !new_taken.contains(n.key)) {
        corr.features[o.key] = n.key;
        new_taken.insert(n.key);
        break;
      }
    }
  }

  // 2. Equal name within corresponding classes.
  for (const auto& o : olds) {
    if (old_taken(o.key)) continue;
    auto owner = corr.classes.find(o.key.owner);
    if (owner == corr.classes.end()) continue;
    for (const auto& n : news) {
      if (new_taken.contains(n.key) || n.key.owner != owner->second || n.key.name != o.key.name)
        continue;
      if (both_have_ids(*o.id, *n.id)) continue;
      corr.features[o.key] = n.key;
      new_taken.insert(n.key);
      break;
    }
  }

  // 3. Moves: same name in a different class. Features of deleted classes
  //    vanish with their class and are not move candidates.
  for (const auto& o : olds) {
    if (old_taken(o.key) || !corr.classes.contains(o.key.owner)) continue;
    const FeatureView* best = nullptr;
    for (const auto& n : news) {
      if (new_taken.contains(n.key) || n.key.name != o.key.name) continue;
      if (both_have_ids(*o.id, *n.id)) continue;
      if (best == nullptr || n.key.owner < best->key.owner) best = &n;
    }
    if (best != nullptr) {
      corr.features[o.key] = best->key;
      new_taken.insert(best->key);
    }
  }

  // 4. Renames within corresponding classes, scored by similarity.
  struct Candidate {
    double score;
    const FeatureView* o;
    const FeatureView* n;
  };
  std::vector<Candidate> candidates;
  for (const auto& o : olds) {
    if (old_taken(o.key)) continue;
    auto owner = corr.classes.find(o.key.owner);
    if (owner == corr.classes.end()) continue;
    const auto ot = feature_tokens(o, &corr.classes);
    for (const auto& n : news) {
      if (new_taken.contains(n.key) || n.key.owner != owner->second) continue;
      if (both_have_ids(*o.id, *n.id)) continue;
      const double s = jaccard(ot, feature_tokens(n, nullptr));
      if (s >= kRenameThreshold) candidates.push_back({s, &o, &n});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.o->key, a.n->key) < std::tie(b.o->key, b.n->key);
  });
  for (const auto& c : candidates) {
    if (old_taken(c.o->key) || new_taken.contains(c.n->key)) continue;
    corr.features[c.o->key] = c.n->key;
    new_taken.insert(c.n->key);
  }
}

}  // namespace

Correspondence match_elements(const Metamodel& old_mm, const Metamodel& new_mm) {
  Correspondence corr;
  std::set<std::string> new_taken;

  for (const auto& o : old_mm.classes) {
    if (!o.id) continue;
    for (const auto& n : new_mm.classes) {
      if (n.id == o.id && !new_taken.contains(n.name)) {
        corr.classes[o.name] = n.name;
        new_taken.insert(n.name);
        break;
      }
    }
  }
  for (const auto& o : old_mm.classes) {
    if (corr.classes.contains(o.name)) continue;
    const ClassDef* n = new_mm.find_class(o.name);
    if (n == nullptr || new_taken.contains(n->name) || both_have_ids(o.id, n->id)) continue;
    corr.classes[o.name] = n->name;
    new_taken.insert(n->name);
  }

  struct Candidate {
    double score;
    std::string o;
    std::string n;
  };
  std::vector<Candidate> candidates;
  for (const auto& o : old_mm.classes) {
    if (corr.classes.contains(o.name)) continue;
    const auto ot = class_tokens(o, &corr.classes);
    for (const auto& n : new_mm.classes) {
      if (new_taken.contains(n.name) || both_have_ids(o.id, n.id)) continue;
      const double s = jaccard(ot, class_tokens(n, nullptr));
      if (s >= kRenameThreshold) candidates.push_back({s, o.name, n.name});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.o, a.n) < std::tie(b.o, b.n);
  });
  for (const auto& c : candidates) {
    if (corr.classes.contains(c.o) || new_taken.contains(c.n)) continue;
    corr.classes[c.o] = c.n;
    new_taken.insert(c.n);
  }

  match_features(old_mm, new_mm, false, corr);
  match_features(old_mm, new_mm, true, corr);
  return corr;
}

// ---------------------------------------------------------------------------
// compute_diff
// ---------------------------------------------------------------------------

namespace {

struct SortKey {
  int category;
  std::string primary;
  int kind;
  auto operator<=>(const SortKey&) const = default;
};

SortKey sort_key(const DiffEntry& e) {
  const int kind = static_cast<int>(e.index());
  return std::visit(
      overloaded{
          [&](const AddedClass& x) { return SortKey{0, x.element.name, kind}; },
          [&](const DeletedClass& x) { return SortKey{0, x.element.name, kind}; },
          [&](const ChangedClass& x) { return SortKey{0, x.element.name, kind}; },
          [&](const auto& x) { return SortKey{1, x.owner + "." + x.element.name, kind}; },
      },
      e);
}

bool same_shell(const ClassDef& o, const ClassDef& n, const std::map<std::string, std::string>& tr) {
  if (o.name != n.name || o.is_abstract != n.is_abstract || o.id != n.id) return false;
  if (o.super_types.size() != n.super_types.size()) return false;
  for (std::size_t i = 0; i < o.super_types.size(); ++i)
    if (translate(tr, o.super_types[i]) != n.super_types[i]) return false;
  return true;
}

bool same_reference(const ReferenceDef& o, const ReferenceDef& n,
                    const std::map<std::string, std::string>& tr) {
  return o.id == n.id && o.name == n.name && translate(tr, o.target) == n.target &&
         o.containment == n.containment && o.lower_bound == n.lower_bound &&
         o.upper_bound == n.upper_bound;
}

}  // namespace

DiffModel compute_diff(const Metamodel& old_mm, const Metamodel& new_mm) {
  const Correspondence corr = match_elements(old_mm, new_mm);
  std::set<std::string> matched_new_classes;
  for (const auto& [o, n] : corr.classes) matched_new_classes.insert(n);
  std::set<FeatureKey> matched_new_features;
  for (const auto& [o, n] : corr.features) matched_new_features.insert(n);

  DiffModel diff;
  for (const auto& o : old_mm.classes) {
    auto it = corr.classes.find(o.name);
    if (it == corr.classes.end()) {
      ClassDef gone = o.shell();
      for (const auto& a : o.attributes)
        if (!corr.features.contains({o.name, a.name, false})) gone.attributes.push_back(a);
      for (const auto& r : o.references)
        if (!corr.features.contains({o.name, r.name, true})) gone.references.push_back(r);
      diff.entries.emplace_back(DeletedClass{std::move(gone)});
      continue;
    }
    const ClassDef& n = *new_mm.find_class(it->second);
    if (!same_shell(o, n, corr.classes))
      diff.entries.emplace_back(ChangedClass{o.shell(), n.shell()});
  }
  for (const auto& n : new_mm.classes)
    if (!matched_new_classes.contains(n.name)) diff.entries.emplace_back(AddedClass{n.shell()});

  for (const auto& o : old_mm.classes) {
    const bool owner_matched = corr.classes.contains(o.name);
    const std::string owner_new = owner_matched ? corr.classes.at(o.name) : std::string();
    for (const auto& a : o.attributes) {
      auto it = corr.features.find({o.name, a.name, false});
      if (it == corr.features.end()) {
        if (owner_matched) diff.entries.emplace_back(DeletedAttribute{o.name, a});
        continue;
      }
      const auto& nk = it->second;
      const AttributeDef& na = *new_mm.find_class(nk.owner)->find_attribute(nk.name);
      if (!owner_matched || nk.owner != owner_new || !(na == a))
        diff.entries.emplace_back(ChangedAttribute{o.name, a, nk.owner, na});
    }
    for (const auto& r : o.references) {
      auto it = corr.features.find({o.name, r.name, true});
      if (it == corr.features.end()) {
        if (owner_matched) diff.entries.emplace_back(DeletedReference{o.name, r});
        continue;
      }
      const auto& nk = it->second;
      const ReferenceDef& nr = *new_mm.find_class(nk.owner)->find_reference(nk.name);
      if (!owner_matched || nk.owner != owner_new || !same_reference(r, nr, corr.classes))
        diff.entries.emplace_back(ChangedReference{o.name, r, nk.owner, nr});
    }
  }
  for (const auto& n : new_mm.classes) {
    for (const auto& a : n.attributes)
      if (!matched_new_features.contains({n.name, a.name, false}))
        diff.entries.emplace_back(AddedAttribute{n.name, a});
    for (const auto& r : n.references)
      if (!matched_new_features.contains({n.name, r.name, true}))
        diff.entries.emplace_back(AddedReference{n.name, r});
  }

  std::stable_sort(diff.entries.begin(), diff.entries.end(),
                   [](const DiffEntry& a, const DiffEntry& b) { return sort_key(a) < sort_key(b); });
  return diff;
}

// ---------------------------------------------------------------------------
// apply_diff
// ---------------------------------------------------------------------------

namespace {

template <typename Feature>
std::vector<Feature>& features_in(ClassDef& c) {
  if constexpr (std::is_same_v<Feature, AttributeDef>)
    return c.attributes;
  else
    return c.references;
}

template <typename Feature>
typename std::vector<Feature>::iterator find_feature(std::vector<Feature>& v, const Feature& f) {
  return std::find_if(v.begin(), v.end(), [&](const Feature& x) { return x.name == f.name; });
}

class Patcher {
 public:
  Patcher(const Metamodel& old_mm, const DiffModel& diff) : old_(old_mm), diff_(diff), work_(old_mm) {}

  Metamodel run() {
    claim_old_sides();
    for (const auto& e : diff_.entries)
      if (const auto* c = std::get_if<ChangedClass>(&e)) renames_[c->element.name] = c->updated.name;

    // Reference targets and supertypes still carry old names; bring them to
    // the new names before changed elements (which already use new names)
    // are written in.
    for (auto& c : work_.classes) {
      for (auto& s : c.super_types) s = translate(renames_, s);
      for (auto& r : c.references) r.target = translate(renames_, r.target);
    }

    for (const auto& e : diff_.entries) {
      std::visit(overloaded{
                     [&](const DeletedAttribute& x) { plan_attributes_[{x.owner, x.element.name}] = std::nullopt; },
                     [&](const DeletedReference& x) { plan_references_[{x.owner, x.element.name}] = std::nullopt; },
                     [&](const ChangedAttribute& x) { plan_change(x, plan_attributes_, moved_attributes_); },
                     [&](const ChangedReference& x) { plan_change(x, plan_references_, moved_references_); },
                     [](const auto&) {},
                 },
                 e);
    }
    for (auto& c : work_.classes) {
      rebuild(c.name, c.attributes, plan_attributes_);
      rebuild(c.name, c.references, plan_references_);
    }

    for (const auto& e : diff_.entries) {
      if (const auto* d = std::get_if<DeletedClass>(&e)) {
        auto it = std::find_if(work_.classes.begin(), work_.classes.end(),
                               [&](const ClassDef& c) { return c.name == d->element.name; });
        work_.classes.erase(it);
      }
    }
    for (const auto& e : diff_.entries) {
      if (const auto* c = std::get_if<ChangedClass>(&e)) {
        ClassDef* target = work_.find_class(c->element.name);
        target->id = c->updated.id;
        target->is_abstract = c->updated.is_abstract;
        target->super_types = c->updated.super_types;
        pending_names_.emplace_back(target, c->updated.name);
      }
    }
    // Renames last so that swapped names never collide mid-way.
    for (auto& [cls, name] : pending_names_) cls->name = name;

    for (const auto& e : diff_.entries) {
      if (const auto* a = std::get_if<AddedClass>(&e)) {
        if (work_.find_class(a->element.name) != nullptr)
          throw ConflictError("added class '" + a->element.name + "' already exists");
        work_.classes.push_back(a->element.shell());
      }
    }
    for (auto& insert : moved_attributes_) add_feature(insert.first, insert.second);
    for (auto& insert : moved_references_) add_feature(insert.first, insert.second);
    for (const auto& e : diff_.entries) {
      std::visit(overloaded{
                     [&](const AddedAttribute& x) { add_feature(x.owner, x.element); },
                     [&](const AddedReference& x) { add_feature(x.owner, x.element); },
                     [](const auto&) {},
                 },
                 e);
    }

    if (auto err = check_invariants(work_))
      throw ConflictError("patched metamodel is invalid: " + *err);
    return std::move(work_);
  }

 private:
  void claim(const std::string& key, const std::string& what) {
    if (!claimed_.insert(key).second) throw ConflictError(what + " appears in more than one entry");
  }

  void claim_old_sides() {
    for (const auto& e : diff_.entries) {
      std::visit(
          overloaded{
              [](const AddedClass&) {},
              [&](const DeletedClass& x) { claim_class(x.element.name); },
              [&](const ChangedClass& x) { claim_class(x.element.name); },
              [](const AddedAttribute&) {},
              [](const AddedReference&) {},
              [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                constexpr bool is_ref = std::is_same_v<T, DeletedReference> ||
                                        std::is_same_v<T, ChangedReference>;
                claim_feature(x.owner, x.element.name, is_ref);
              },
          },
          e);
    }
  }

  void claim_class(const std::string& name) {
    if (old_.find_class(name) == nullptr)
      throw ConflictError("class '" + name + "' does not exist in the old metamodel");
    claim("c:" + name, "class '" + name + "'");
  }

  void claim_feature(const std::string& owner, const std::string& name, bool is_ref) {
    const ClassDef* c = old_.find_class(owner);
    const bool found = c != nullptr && (is_ref ? c->find_reference(name) != nullptr
                                               : c->find_attribute(name) != nullptr);
    if (!found)
      throw ConflictError("feature '" + owner + "." + name + "' does not exist in the old metamodel");
    claim(std::string(is_ref ? "r:" : "a:") + owner + "." + name, "feature '" + owner + "." + name + "'");
  }

  // Planned fate of an old feature: nullopt removes it, a value replaces it
  // in place. Features moved to another owner are removed here and queued.
  template <typename Feature>
  using Plan = std::map<std::pair<std::string, std::string>, std::optional<Feature>>;

  template <typename Feature>
  void plan_change(const ChangedFeature<Feature>& x, Plan<Feature>& plan,
                   std::vector<std::pair<std::string, Feature>>& moved) {
    if (translate(renames_, x.owner) == x.new_owner) {
      plan[{x.owner, x.element.name}] = x.updated;
      return;
    }
    plan[{x.owner, x.element.name}] = std::nullopt;
    moved.emplace_back(x.new_owner, x.updated);
  }

  template <typename Feature>
  static void rebuild(const std::string& owner, std::vector<Feature>& v, const Plan<Feature>& plan) {
    std::vector<Feature> out;
    out.reserve(v.size());
    for (auto& f : v) {
      auto it = plan.find({owner, f.name});
      if (it == plan.end())
        out.push_back(std::move(f));
      else if (it->second)
        out.push_back(*it->second);
    }
    v = std::move(out);
  }

  template <typename Feature>
  void add_feature(const std::string& owner, const Feature& f) {
    ClassDef* c = work_.find_class(owner);
    if (c == nullptr) throw ConflictError("owner class '" + owner + "' does not exist");
    auto& v = features_in<Feature>(*c);
    if (find_feature(v, f) != v.end())
      throw ConflictError("feature '" + owner + "." + f.name + "' already exists");
    v.push_back(f);
  }

  const Metamodel& old_;
  const DiffModel& diff_;
  Metamodel work_;
  std::set<std::string> claimed_;
  std::map<std::string, std::string> renames_;
  std::vector<std::pair<ClassDef*, std::string>> pending_names_;
  Plan<AttributeDef> plan_attributes_;
  Plan<ReferenceDef> plan_references_;
  std::vector<std::pair<std::string, AttributeDef>> moved_attributes_;
  std::vector<std::pair<std::string, ReferenceDef>> moved_references_;
};

}  // namespace

Metamodel apply_diff(const Metamodel& old_mm, const DiffModel& diff) {
  return Patcher(old_mm, diff).run();
}

}  // namespace coevo
