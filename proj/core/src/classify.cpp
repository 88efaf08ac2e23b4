#include "coevo/classify.hpp"

#include <algorithm>
#include <set>

namespace coevo {

namespace {

constexpr std::string_view kNames[] = {
    "AddEmptyConcreteClass", "AddEmptyAbstractClass", "AddSpecialization", "DeleteConcreteClass",
    "RenameClass",           "AddProperty",           "DeleteProperty",    "RenameProperty",
    "MoveProperty",          "PullUpProperty",        "ChangePropertyType",
};

}  // namespace

std::string_view to_string(ChangeKind k) { return kNames[static_cast<std::size_t>(k)]; }

std::optional<ChangeKind> change_kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < std::size(kNames); ++i)
    if (kNames[i] == s) return static_cast<ChangeKind>(i);
  return std::nullopt;
}

const std::vector<ChangeKind>& all_change_kinds() {
  static const std::vector<ChangeKind> kinds = [] {
    std::vector<ChangeKind> v;
    for (std::size_t i = 0; i < std::size(kNames); ++i) v.push_back(static_cast<ChangeKind>(i));
    return v;
  }();
  return kinds;
}

const CatalogChange* Classification::change_for(std::size_t index) const {
  for (const auto& c : changes)
    if (std::find(c.entries.begin(), c.entries.end(), index) != c.entries.end()) return &c;
  return nullptr;
}

namespace {

class Classifier {
 public:
  // The old metamodel is implied by the diff's old-side elements.
  Classifier(const DiffModel& diff, const Metamodel& new_mm) : diff_(diff), new_(new_mm) {
    for (const auto& e : diff_.entries)
      if (const auto* c = std::get_if<ChangedClass>(&e)) renames_[c->element.name] = c->updated.name;
  }

  Classification run() {
    match_compound();
    absorb_references_of_deleted_classes();

    Classification out;
    for (std::size_t i = 0; i < diff_.entries.size(); ++i) {
      if (absorbed_.count(i)) continue;
      auto change = classify(i);
      if (!change) {
        out.unclassified.push_back(i);
        continue;
      }
      change->entries.insert(change->entries.begin(), i);
      if (auto it = extra_entries_.find(i); it != extra_entries_.end())
        change->entries.insert(change->entries.end(), it->second.begin(), it->second.end());
      if (auto it = compound_.find(i); it != compound_.end())
        change->bindings.insert(it->second.begin(), it->second.end());
      out.changes.push_back(std::move(*change));
    }
    return out;
  }

 private:
  std::string in_new(const std::string& old_class) const {
    auto it = renames_.find(old_class);
    return it == renames_.end() ? old_class : it->second;
  }

  bool deleted(const std::string& old_class) const {
    for (const auto& e : diff_.entries)
      if (const auto* d = std::get_if<DeletedClass>(&e); d && d->element.name == old_class)
        return true;
    return false;
  }

  template <typename T>
  std::optional<std::size_t> find_entry(auto pred) const {
    for (std::size_t i = 0; i < diff_.entries.size(); ++i)
      if (const auto* x = std::get_if<T>(&diff_.entries[i]); x && pred(*x)) return i;
    return std::nullopt;
  }

  // Added concrete class s1 whose first supertype is an added abstract
  // class s2, which an existing class s3 now specializes first; s4 is an
  // attribute of s3 pulled up into s2 (its updated element is s5).
  void match_compound() {
    for (std::size_t i = 0; i < diff_.entries.size(); ++i) {
      const auto* s1 = std::get_if<AddedClass>(&diff_.entries[i]);
      if (!s1 || s1->element.is_abstract || s1->element.super_types.empty()) continue;
      const std::string& s2_name = s1->element.super_types.front();
      auto s2 = find_entry<AddedClass>(
          [&](const AddedClass& a) { return a.element.name == s2_name && a.element.is_abstract; });
      if (!s2) continue;

      std::optional<std::size_t> s3;
      for (std::size_t j = 0; j < diff_.entries.size(); ++j) {
        const auto* c = std::get_if<ChangedClass>(&diff_.entries[j]);
        if (!c || c->updated.super_types.empty() || c->updated.super_types.front() != s2_name)
          continue;
        if (!s3 || c->element.name < std::get<ChangedClass>(diff_.entries[*s3]).element.name)
          s3 = j;
      }
      if (!s3) continue;
      const auto& s3_entry = std::get<ChangedClass>(diff_.entries[*s3]);

      Bindings b{{"s1", s1->element.name},
                 {"s2", s2_name},
                 {"s3", s3_entry.element.name},
                 {"s3.updated", s3_entry.updated.name}};

      std::optional<std::size_t> s4;
      for (std::size_t j = 0; j < diff_.entries.size(); ++j) {
        const auto* a = std::get_if<ChangedAttribute>(&diff_.entries[j]);
        if (!a || a->owner != s3_entry.element.name || a->new_owner != s2_name) continue;
        if (!s4 || a->element.name < std::get<ChangedAttribute>(diff_.entries[*s4]).element.name)
          s4 = j;
      }
      if (s4) {
        const auto& a = std::get<ChangedAttribute>(diff_.entries[*s4]);
        b["s4"] = a.owner + "." + a.element.name;
        b["s5"] = a.new_owner + "." + a.updated.name;
        compound_[*s4] = b;
      }
      compound_[i] = b;
    }
  }

  void absorb_references_of_deleted_classes() {
    for (std::size_t i = 0; i < diff_.entries.size(); ++i) {
      const auto* d = std::get_if<DeletedClass>(&diff_.entries[i]);
      if (!d || d->element.is_abstract) continue;
      for (std::size_t j = 0; j < diff_.entries.size(); ++j) {
        const auto* r = std::get_if<DeletedReference>(&diff_.entries[j]);
        if (r && r->element.target == d->element.name && r->owner != d->element.name &&
            !absorbed_.count(j)) {
          absorbed_.insert(j);
          extra_entries_[i].push_back(j);
        }
      }
    }
  }

  std::optional<CatalogChange> classify(std::size_t i) const {
    const DiffEntry& e = diff_.entries[i];
    switch (kind_of(e)) {
      case EntryKind::AddedClass: {
        const auto& c = std::get<AddedClass>(e).element;
        if (c.is_abstract) return CatalogChange{ChangeKind::AddEmptyAbstractClass, {{"class", c.name}}, {}};
        if (!c.super_types.empty())
          return CatalogChange{ChangeKind::AddSpecialization,
                               {{"class", c.name}, {"superType", c.super_types.front()}, {"added", "true"}},
                               {}};
        return CatalogChange{ChangeKind::AddEmptyConcreteClass, {{"class", c.name}}, {}};
      }
      case EntryKind::DeletedClass: {
        const auto& c = std::get<DeletedClass>(e).element;
        if (c.is_abstract) return std::nullopt;
        return CatalogChange{ChangeKind::DeleteConcreteClass, {{"class", c.name}}, {}};
      }
      case EntryKind::ChangedClass: return classify_changed_class(std::get<ChangedClass>(e));
      case EntryKind::AddedAttribute: return added(std::get<AddedAttribute>(e));
      case EntryKind::AddedReference: return added(std::get<AddedReference>(e));
      case EntryKind::DeletedAttribute: return removed(std::get<DeletedAttribute>(e));
      case EntryKind::DeletedReference: return removed(std::get<DeletedReference>(e));
      case EntryKind::ChangedAttribute: {
        const auto& a = std::get<ChangedAttribute>(e);
        return changed(a, a.element.type != a.updated.type);
      }
      case EntryKind::ChangedReference: {
        const auto& r = std::get<ChangedReference>(e);
        return changed(r, in_new(r.element.target) != r.updated.target);
      }
    }
    return std::nullopt;
  }

  std::optional<CatalogChange> classify_changed_class(const ChangedClass& c) const {
    if (c.element.name != c.updated.name)
      return CatalogChange{ChangeKind::RenameClass,
                           {{"class", c.element.name}, {"newName", c.updated.name}},
                           {}};
    if (c.element.is_abstract != c.updated.is_abstract) return std::nullopt;
    std::set<std::string> before;
    for (const auto& s : c.element.super_types) before.insert(in_new(s));
    const std::set<std::string> after(c.updated.super_types.begin(), c.updated.super_types.end());
    if (before.size() >= after.size() || !std::includes(after.begin(), after.end(), before.begin(), before.end()))
      return std::nullopt;
    std::string first_new;
    for (const auto& s : c.updated.super_types)
      if (!before.count(s)) {
        first_new = s;
        break;
      }
    return CatalogChange{ChangeKind::AddSpecialization,
                         {{"class", c.updated.name}, {"superType", first_new}, {"added", "false"}},
                         {}};
  }

  template <typename Entry>
  static CatalogChange added(const Entry& a) {
    return {ChangeKind::AddProperty, {{"owner", a.owner}, {"feature", a.element.name}}, {}};
  }
  template <typename Entry>
  static CatalogChange removed(const Entry& d) {
    return {ChangeKind::DeleteProperty, {{"owner", d.owner}, {"feature", d.element.name}}, {}};
  }

  template <typename Entry>
  std::optional<CatalogChange> changed(const Entry& c, bool type_changed) const {
    Bindings b{{"owner", c.owner},
               {"feature", c.element.name},
               {"newOwner", c.new_owner},
               {"newName", c.updated.name}};
    if (deleted(c.owner) || in_new(c.owner) != c.new_owner) {
      const bool pulled_up = !deleted(c.owner) && new_.is_ancestor(c.new_owner, in_new(c.owner));
      return CatalogChange{pulled_up ? ChangeKind::PullUpProperty : ChangeKind::MoveProperty,
                           std::move(b), {}};
    }
    if (type_changed) return CatalogChange{ChangeKind::ChangePropertyType, std::move(b), {}};
    if (c.element.name != c.updated.name)
      return CatalogChange{ChangeKind::RenameProperty, std::move(b), {}};
    return std::nullopt;
  }

  const DiffModel& diff_;
  const Metamodel& new_;
  std::map<std::string, std::string> renames_;
  std::map<std::size_t, Bindings> compound_;
  std::set<std::size_t> absorbed_;
  std::map<std::size_t, std::vector<std::size_t>> extra_entries_;
};

}  // namespace

Classification classify_changes(const DiffModel& diff, const Metamodel& /*old_mm*/,
                                const Metamodel& new_mm) {
  return Classifier(diff, new_mm).run();
}

}  // namespace coevo
