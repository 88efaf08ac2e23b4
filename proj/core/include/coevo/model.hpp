// Domain metamodel and the four editor-definition model kinds.
//
// All models are plain values. Cross-model links (mapping -> domain,
// mapping -> tooling, mapping -> graph, emfgen -> domain) are names and
// may dangle; resolution happens in resolve.hpp and soundness.hpp.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coevo {

// ---------------------------------------------------------------------------
// Domain metamodel
// ---------------------------------------------------------------------------

/// Closed set of attribute types.
enum class PrimitiveType { String, Int, Boolean, Float };

std::string_view to_string(PrimitiveType t);
std::optional<PrimitiveType> primitive_from_string(std::string_view s);

struct AttributeDef {
  std::optional<std::string> id;
  std::string name;
  PrimitiveType type = PrimitiveType::String;

  bool operator==(const AttributeDef&) const = default;
};

/// Upper bound of a reference; std::nullopt encodes "unbounded".
using UpperBound = std::optional<std::uint32_t>;

struct ReferenceDef {
  std::optional<std::string> id;
  std::string name;
  std::string target;
  bool containment = false;
  std::uint32_t lower_bound = 0;
  UpperBound upper_bound;

  bool operator==(const ReferenceDef&) const = default;
};

struct ClassDef {
  std::optional<std::string> id;
  std::string name;
  bool is_abstract = false;
  std::vector<std::string> super_types;
  std::vector<AttributeDef> attributes;
  std::vector<ReferenceDef> references;

  bool operator==(const ClassDef&) const = default;

  const AttributeDef* find_attribute(std::string_view n) const;
  const ReferenceDef* find_reference(std::string_view n) const;
  bool declares(std::string_view feature) const {
    return find_attribute(feature) != nullptr || find_reference(feature) != nullptr;
  }
  /// Copy of this class with no features.
  ClassDef shell() const;
};

struct Metamodel {
  std::string name;
  std::vector<ClassDef> classes;

  bool operator==(const Metamodel&) const = default;

  const ClassDef* find_class(std::string_view n) const;
  ClassDef* find_class(std::string_view n);

  /// Transitive supertypes of `cls` (depth-first, declaration order, no
  /// duplicates, excluding `cls`). Unknown names are skipped.
  std::vector<std::string> ancestors(std::string_view cls) const;
  bool is_ancestor(std::string_view ancestor, std::string_view cls) const;
  /// Classes that have `cls` among their ancestors.
  std::vector<std::string> descendants(std::string_view cls) const;

  /// An attribute together with the class that declares it.
  struct OwnedAttribute {
    std::string owner;
    const AttributeDef* attribute;
  };
  /// Inherited attributes first (ancestor order), then the class's own.
  std::vector<OwnedAttribute> all_attributes(std::string_view cls) const;

  /// Type of feature `feature` declared directly in `owner`: the primitive
  /// type name for attributes, the target class for references.
  std::optional<std::string> declared_feature_type(std::string_view owner,
                                                   std::string_view feature) const;

  /// Concrete class owning containment references that no containment
  /// reference can hold; it plays the role of the diagram canvas.
  bool is_canvas(std::string_view cls) const;
};

/// Metamodel with classes sorted by name and features sorted by name.
/// Equality modulo ordering is equality of canonical forms.
Metamodel canonical_order(Metamodel mm);

// ---------------------------------------------------------------------------
// Graphical definition model
// ---------------------------------------------------------------------------

enum class FigureKind { Rectangle, Ellipse, Polyline, Label };

std::string_view to_string(FigureKind k);
std::optional<FigureKind> figure_kind_from_string(std::string_view s);

struct FigureDef {
  std::string name;
  FigureKind kind = FigureKind::Rectangle;
  bool operator==(const FigureDef&) const = default;
};

/// Node, connection and diagram label all bind a name to a figure.
struct CanvasElement {
  std::string name;
  std::string figure;
  bool operator==(const CanvasElement&) const = default;
};

struct GraphModel {
  std::vector<FigureDef> figures;
  std::vector<CanvasElement> nodes;
  std::vector<CanvasElement> connections;
  std::vector<CanvasElement> diagram_labels;

  bool operator==(const GraphModel&) const = default;

  bool has_node(std::string_view n) const;
  bool has_connection(std::string_view n) const;
  bool has_label(std::string_view n) const;
};

// ---------------------------------------------------------------------------
// Tooling definition model
// ---------------------------------------------------------------------------

struct CreationTool {
  std::string title;
  std::string description;
  bool operator==(const CreationTool&) const = default;
};

struct ToolGroup {
  std::string name;
  std::vector<CreationTool> tools;
  bool operator==(const ToolGroup&) const = default;
};

struct ToolingModel {
  std::vector<ToolGroup> palette;

  bool operator==(const ToolingModel&) const = default;

  const CreationTool* find_tool(std::string_view title) const;
  std::vector<std::string> titles() const;
};

// ---------------------------------------------------------------------------
// Mapping model
// ---------------------------------------------------------------------------

/// Link to a feature declared in `class_name`. `recorded_type_name` is the
/// feature type when the link was made (primitive name or target class).
struct FeatureRef {
  std::string class_name;
  std::string feature_name;
  std::string recorded_type_name;

  bool operator==(const FeatureRef&) const = default;
  std::string qualified() const { return class_name + "." + feature_name; }
};

struct FeatureLabelMapping {
  std::vector<FeatureRef> features;
  std::string diagram_label;
  bool operator==(const FeatureLabelMapping&) const = default;
};

struct NodeMapping {
  std::string domain_meta_element;
  std::string tool;  // empty: no creation tool
  std::string diagram_node;
  std::vector<std::string> related_diagrams;
  std::vector<FeatureLabelMapping> label_mappings;
  bool operator==(const NodeMapping&) const = default;
};

struct TopNodeReference {
  FeatureRef containment_feature;
  NodeMapping owned_child;
  bool operator==(const TopNodeReference&) const = default;
};

struct LinkMapping {
  std::string domain_meta_element;
  std::string tool;
  std::string diagram_link;
  FeatureRef source_feature;
  FeatureRef target_feature;
  bool operator==(const LinkMapping&) const = default;
};

struct MappingModel {
  std::vector<TopNodeReference> top_node_references;
  std::vector<LinkMapping> link_mappings;
  bool operator==(const MappingModel&) const = default;
};

// ---------------------------------------------------------------------------
// EMF generator model
// ---------------------------------------------------------------------------

struct GenClass {
  std::string class_name;
  std::vector<std::string> gen_features;
  bool operator==(const GenClass&) const = default;
};

struct EmfGenModel {
  std::string package_prefix;
  std::vector<GenClass> gen_classes;

  bool operator==(const EmfGenModel&) const = default;

  const GenClass* find(std::string_view class_name) const;
};

// ---------------------------------------------------------------------------

struct EditorModelSet {
  Metamodel domain;
  GraphModel graph;
  ToolingModel tooling;
  MappingModel mapping;
  EmfGenModel emfgen;

  bool operator==(const EditorModelSet&) const = default;
};

/// True for [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view s);

/// Checks per-model invariants; returns a description of the first
/// violation or std::nullopt.
std::optional<std::string> check_invariants(const Metamodel& mm);
std::optional<std::string> check_invariants(const GraphModel& g);
std::optional<std::string> check_invariants(const ToolingModel& t);
std::optional<std::string> check_invariants(const MappingModel& m);
std::optional<std::string> check_invariants(const EmfGenModel& e);

}  // namespace coevo
