// Model-based differences between two metamodel versions.
//
// A DiffModel is an ordered list of Added/Deleted/Changed entries over
// classes, attributes and references. Changed entries pair the old element
// with its updated element; a rename is a ChangedClass whose names differ,
// a move is a Changed feature whose owners differ.
//
// Entry conventions:
//   - AddedClass carries the class shell only; the new class's features
//     arrive as Added* (or Changed*, when moved in) entries.
//   - DeletedClass carries the old class with the features that vanish with
//     it; features moved out of a deleted class appear as Changed* entries.
//   - Reference targets and supertypes are compared through the class
//     correspondence, so renaming a class does not mark the references
//     pointing at it as changed.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coevo/model.hpp"

namespace coevo {

struct AddedClass {
  ClassDef element;
  bool operator==(const AddedClass&) const = default;
};
struct DeletedClass {
  ClassDef element;
  bool operator==(const DeletedClass&) const = default;
};
struct ChangedClass {
  ClassDef element;  // old shell
  ClassDef updated;  // new shell
  bool operator==(const ChangedClass&) const = default;
};

template <typename Feature>
struct AddedFeature {
  std::string owner;
  Feature element;
  bool operator==(const AddedFeature&) const = default;
};
template <typename Feature>
struct DeletedFeature {
  std::string owner;
  Feature element;
  bool operator==(const DeletedFeature&) const = default;
};
template <typename Feature>
struct ChangedFeature {
  std::string owner;  // old owner (old metamodel name)
  Feature element;
  std::string new_owner;  // new metamodel name
  Feature updated;
  bool operator==(const ChangedFeature&) const = default;
};

using AddedAttribute = AddedFeature<AttributeDef>;
using DeletedAttribute = DeletedFeature<AttributeDef>;
using ChangedAttribute = ChangedFeature<AttributeDef>;
using AddedReference = AddedFeature<ReferenceDef>;
using DeletedReference = DeletedFeature<ReferenceDef>;
using ChangedReference = ChangedFeature<ReferenceDef>;

using DiffEntry = std::variant<AddedClass, DeletedClass, ChangedClass, AddedAttribute,
                               DeletedAttribute, ChangedAttribute, AddedReference,
                               DeletedReference, ChangedReference>;

enum class EntryKind {
  AddedClass,
  DeletedClass,
  ChangedClass,
  AddedAttribute,
  DeletedAttribute,
  ChangedAttribute,
  AddedReference,
  DeletedReference,
  ChangedReference,
};

EntryKind kind_of(const DiffEntry& e);
std::string_view to_string(EntryKind k);
std::optional<EntryKind> entry_kind_from_string(std::string_view s);

/// Id of the element an entry is about (new side for Added, old otherwise).
std::optional<std::string> element_id(const DiffEntry& e);
/// One-line human summary, e.g. "ChangedClass Topic -> ScientificTopic".
std::string describe(const DiffEntry& e);

struct DiffModel {
  std::vector<DiffEntry> entries;
  bool operator==(const DiffModel&) const = default;
  bool empty() const { return entries.empty(); }
};

std::string serialize(const DiffModel& d);
DiffModel parse_diff(std::string_view document);

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

struct FeatureKey {
  std::string owner;
  std::string name;
  bool is_reference = false;

  auto operator<=>(const FeatureKey&) const = default;
};

/// Partial injective map from old elements to new elements.
struct Correspondence {
  std::map<std::string, std::string> classes;  // old name -> new name
  std::map<FeatureKey, FeatureKey> features;   // old -> new

  bool operator==(const Correspondence&) const = default;
};

/// Pairs scoring at or above this Jaccard similarity count as renames.
inline constexpr double kRenameThreshold = 0.5;

/// |a ∩ b| / |a ∪ b|; two empty sets score 0 (no evidence of identity).
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

/// Matches by stable id where both sides carry one, then by equal name,
/// then pairs leftover elements as renames (classes) or moves/renames
/// (features) when their similarity reaches kRenameThreshold. Ties are
/// broken by lexicographic name order.
Correspondence match_elements(const Metamodel& old_mm, const Metamodel& new_mm);

DiffModel compute_diff(const Metamodel& old_mm, const Metamodel& new_mm);

/// Patches `old_mm`. Added classes and moved/added features are appended;
/// changed elements keep their position when their owner is unchanged.
/// Throws ConflictError when an old-side element is missing or claimed by
/// more than one entry, or when the result violates metamodel invariants.
Metamodel apply_diff(const Metamodel& old_mm, const DiffModel& diff);

// ---------------------------------------------------------------------------
// Difference schema
// ---------------------------------------------------------------------------

/// Schema whose instances are difference models over a source schema:
/// for every source class MC it holds AddedMC, DeletedMC and ChangedMC, each
/// specializing MC, and ChangedMC references the updated MC through
/// `updatedElement`.
struct DifferenceSchema {
  std::string name;
  std::vector<ClassDef> classes;
  bool operator==(const DifferenceSchema&) const = default;
};

DifferenceSchema derive_difference_schema(const Metamodel& source);

std::string serialize(const DifferenceSchema& s);
DifferenceSchema parse_difference_schema(std::string_view document);

/// Subset of the Ecore meta-schema: EClass, EAttribute, EReference.
const Metamodel& ecore_subset();

}  // namespace coevo
