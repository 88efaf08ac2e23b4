#include "coevo/evolution.hpp"

#include "coevo/errors.hpp"

namespace coevo {

Trace::Trace(const DiffModel& diff) {
  for (const auto& e : diff.entries) {
    if (const auto* c = std::get_if<ChangedClass>(&e); c && c->element.name != c->updated.name) {
      renames_[c->element.name] = c->updated.name;
      reverse_[c->updated.name] = c->element.name;
    } else if (const auto* d = std::get_if<DeletedClass>(&e)) {
      deleted_.insert(d->element.name);
      for (const auto& a : d->element.attributes) features_[{d->element.name, a.name}].deleted = true;
      for (const auto& r : d->element.references) features_[{d->element.name, r.name}].deleted = true;
    } else if (const auto* a = std::get_if<AddedClass>(&e)) {
      added_.insert(a->element.name);
    }
  }

  auto changed = [&](const auto& c, bool retyped) {
    FeatureFate f;
    f.new_owner = c.new_owner;
    f.new_name = c.updated.name;
    f.moved = class_deleted(c.owner) || class_in_new(c.owner) != c.new_owner;
    f.renamed = c.element.name != c.updated.name;
    f.retyped = retyped;
    features_[{c.owner, c.element.name}] = std::move(f);
  };
  for (const auto& e : diff.entries) {
    if (const auto* a = std::get_if<DeletedAttribute>(&e)) {
      features_[{a->owner, a->element.name}].deleted = true;
    } else if (const auto* r = std::get_if<DeletedReference>(&e)) {
      features_[{r->owner, r->element.name}].deleted = true;
    } else if (const auto* ca = std::get_if<ChangedAttribute>(&e)) {
      changed(*ca, ca->element.type != ca->updated.type);
    } else if (const auto* cr = std::get_if<ChangedReference>(&e)) {
      changed(*cr, class_in_new(cr->element.target) != cr->updated.target);
    }
  }
}

std::string Trace::class_in_new(std::string_view old_class) const {
  auto it = renames_.find(std::string(old_class));
  return it == renames_.end() ? std::string(old_class) : it->second;
}

std::string Trace::class_in_old(std::string_view new_class) const {
  auto it = reverse_.find(std::string(new_class));
  return it == reverse_.end() ? std::string(new_class) : it->second;
}

bool Trace::class_deleted(std::string_view old_class) const { return deleted_.count(old_class) > 0; }
bool Trace::class_renamed(std::string_view old_class) const {
  return renames_.count(std::string(old_class)) > 0;
}
bool Trace::class_added(std::string_view new_class) const { return added_.count(new_class) > 0; }

const FeatureFate* Trace::feature_fate(std::string_view owner, std::string_view name) const {
  auto it = features_.find({std::string(owner), std::string(name)});
  return it == features_.end() ? nullptr : &it->second;
}

std::optional<std::pair<std::string, std::string>> Trace::feature_in_old(
    std::string_view new_owner, std::string_view new_name) const {
  for (const auto& [key, fate] : features_)
    if (!fate.deleted && fate.new_owner == new_owner && fate.new_name == new_name) return key;
  return std::nullopt;
}

bool Trace::only_renamed(std::string_view owner, std::string_view name) const {
  if (class_deleted(owner)) return false;
  if (const FeatureFate* f = feature_fate(owner, name))
    return !f->deleted && !f->moved && !f->retyped && (f->renamed || class_renamed(owner));
  return class_renamed(owner);
}

// ---------------------------------------------------------------------------

Evolution::Evolution(const DiffModel& diff, const Metamodel& old_mm, const Metamodel& new_mm)
    : diff_(&diff), old_(&old_mm), new_(&new_mm), trace_(diff) {}

std::string Evolution::class_in_new_metamodel(std::string_view c) const {
  if (!old_->find_class(c)) throw LookupError("no class '" + std::string(c) + "' in the old metamodel");
  if (trace_.class_deleted(c)) throw LookupError("class '" + std::string(c) + "' was deleted");
  return trace_.class_in_new(c);
}

std::string Evolution::new_container(std::string_view owner, std::string_view name) const {
  if (const FeatureFate* f = trace_.feature_fate(owner, name)) {
    if (f->deleted)
      throw LookupError("feature '" + std::string(owner) + "." + std::string(name) + "' was deleted");
    return f->new_owner;
  }
  return class_in_new_metamodel(owner);
}

bool Evolution::is_moved(std::string_view owner, std::string_view name) const {
  const FeatureFate* f = trace_.feature_fate(owner, name);
  return f && !f->deleted && f->moved;
}

bool Evolution::is_moved_to_added_class(std::string_view owner, std::string_view name) const {
  const FeatureFate* f = trace_.feature_fate(owner, name);
  return f && !f->deleted && f->moved && trace_.class_added(f->new_owner);
}

bool Evolution::is_renamed(std::string_view owner, std::string_view name) const {
  const FeatureFate* f = trace_.feature_fate(owner, name);
  return f && !f->deleted && f->renamed;
}

FeatureRef Evolution::feature_in_new(const FeatureRef& old_ref) const {
  FeatureRef out;
  out.class_name = new_container(old_ref.class_name, old_ref.feature_name);
  const FeatureFate* f = trace_.feature_fate(old_ref.class_name, old_ref.feature_name);
  out.feature_name = f ? f->new_name : old_ref.feature_name;
  auto type = new_->declared_feature_type(out.class_name, out.feature_name);
  out.recorded_type_name = type ? *type : trace_.class_in_new(old_ref.recorded_type_name);
  return out;
}

}  // namespace coevo
