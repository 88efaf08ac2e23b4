// Correspondence between an old and a new metamodel version as seen
// through a difference model.
//
// Trace needs only the diff and is what rename-aware validation consumes.
// Evolution adds both metamodel versions and offers the lookup helpers the
// adapters are written against.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "coevo/diff.hpp"
#include "coevo/model.hpp"

namespace coevo {

struct FeatureFate {
  std::string new_owner;  // empty when deleted
  std::string new_name;
  bool deleted = false;
  bool moved = false;    // owner is not the renamed old owner
  bool renamed = false;  // feature name changed
  bool retyped = false;  // attribute type or translated reference target changed

  bool operator==(const FeatureFate&) const = default;
};

class Trace {
 public:
  Trace() = default;
  explicit Trace(const DiffModel& diff);

  /// Old name -> new name, for classes whose name changed.
  const std::map<std::string, std::string>& class_renames() const { return renames_; }
  /// New name of an old class; the name itself when unchanged or unknown.
  std::string class_in_new(std::string_view old_class) const;
  /// Old name of a new class; the name itself when it was not renamed.
  std::string class_in_old(std::string_view new_class) const;
  bool class_deleted(std::string_view old_class) const;
  bool class_renamed(std::string_view old_class) const;
  bool class_added(std::string_view new_class) const;

  /// Fate of feature `name` declared in old class `owner`; std::nullopt
  /// when no feature entry mentions it.
  const FeatureFate* feature_fate(std::string_view owner, std::string_view name) const;

  /// Old feature that became (new_owner, new_name), if it was changed.
  std::optional<std::pair<std::string, std::string>> feature_in_old(std::string_view new_owner,
                                                                   std::string_view new_name) const;

  /// True when (owner, name) no longer exists only because it or its
  /// declaring class was renamed: nothing else about it changed.
  bool only_renamed(std::string_view owner, std::string_view name) const;

  bool empty() const { return renames_.empty() && features_.empty() && deleted_.empty(); }

 private:
  std::map<std::string, std::string> renames_;
  std::map<std::string, std::string> reverse_;
  std::set<std::string, std::less<>> deleted_;
  std::set<std::string, std::less<>> added_;
  std::map<std::pair<std::string, std::string>, FeatureFate> features_;
};

class Evolution {
 public:
  Evolution(const DiffModel& diff, const Metamodel& old_mm, const Metamodel& new_mm);

  const DiffModel& diff() const { return *diff_; }
  const Metamodel& old_metamodel() const { return *old_; }
  const Metamodel& new_metamodel() const { return *new_; }
  const Trace& trace() const { return trace_; }

  /// Counterpart of old class `c`. Throws LookupError when `c` was deleted
  /// or does not exist in the old metamodel.
  std::string class_in_new_metamodel(std::string_view c) const;
  /// Owner of old feature (owner, name) in the new metamodel. Throws
  /// LookupError when the feature was deleted.
  std::string new_container(std::string_view owner, std::string_view name) const;
  bool is_moved(std::string_view owner, std::string_view name) const;
  bool is_moved_to_added_class(std::string_view owner, std::string_view name) const;
  bool is_renamed(std::string_view owner, std::string_view name) const;
  /// Rewrites a reference to an old feature into one to its new-side
  /// counterpart, with the recorded type taken from the new metamodel.
  /// Throws LookupError when the feature was deleted.
  FeatureRef feature_in_new(const FeatureRef& old_ref) const;

 private:
  const DiffModel* diff_;
  const Metamodel* old_;
  const Metamodel* new_;
  Trace trace_;
};

}  // namespace coevo
