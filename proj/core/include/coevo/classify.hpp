// Classification of difference entries into the catalog of metamodel changes.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coevo/diff.hpp"

namespace coevo {

enum class ChangeKind {
  AddEmptyConcreteClass,
  AddEmptyAbstractClass,
  AddSpecialization,
  DeleteConcreteClass,
  RenameClass,
  AddProperty,
  DeleteProperty,
  RenameProperty,
  MoveProperty,
  PullUpProperty,
  ChangePropertyType,
};

std::string_view to_string(ChangeKind k);
std::optional<ChangeKind> change_kind_from_string(std::string_view s);
/// All kinds in catalog order.
const std::vector<ChangeKind>& all_change_kinds();

/// Role name -> element name.
///
/// Class changes bind "class" (new name for additions and specializations,
/// old name otherwise). RenameClass adds "newName"; AddSpecialization adds
/// "superType" and "added" ("true" when the specialized class is new).
/// Property changes bind "owner" and "feature" (old side, new side for
/// AddProperty); changed properties add "newOwner" and "newName".
/// When the added-specialization compound pattern matches, the
/// AddSpecialization and PullUpProperty changes it covers also carry
/// "s1".."s5" and "s3.updated".
using Bindings = std::map<std::string, std::string>;

struct CatalogChange {
  ChangeKind kind;
  Bindings bindings;
  std::vector<std::size_t> entries;  // indices into DiffModel::entries

  bool operator==(const CatalogChange&) const = default;
};

struct Classification {
  std::vector<CatalogChange> changes;
  std::vector<std::size_t> unclassified;

  bool operator==(const Classification&) const = default;

  /// Change covering entry `index`, if any.
  const CatalogChange* change_for(std::size_t index) const;
};

/// Each entry is covered by exactly one change or listed as unclassified.
/// Changes appear in order of their first covered entry.
Classification classify_changes(const DiffModel& diff, const Metamodel& old_mm,
                                const Metamodel& new_mm);

}  // namespace coevo
