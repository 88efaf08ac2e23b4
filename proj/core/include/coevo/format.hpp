// Versioned JSON documents, one per model.
//
// Every document starts with "formatVersion": "1.0" and a "kind" field.
// Serialization is canonical: keys in schema order, arrays in model order,
// two-space indentation, LF line endings, trailing newline.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "coevo/model.hpp"

namespace coevo {

inline constexpr std::string_view kFormatVersion = "1.0";

enum class ModelKind { Metamodel, Graph, Tooling, Mapping, EmfGen, Diff, Blame, DiffSchema, Plan };

std::string_view to_string(ModelKind k);
std::optional<ModelKind> model_kind_from_string(std::string_view s);

/// File extension for the per-kind file, e.g. ".mm.json".
std::string_view file_extension(ModelKind k);
/// Kind implied by a file name's extension, if any.
std::optional<ModelKind> kind_from_path(std::string_view path);

/// Reads the "kind" field of a document without validating the rest.
ModelKind peek_kind(std::string_view document);

Metamodel parse_metamodel(std::string_view document);
GraphModel parse_graph(std::string_view document);
ToolingModel parse_tooling(std::string_view document);
MappingModel parse_mapping(std::string_view document);
EmfGenModel parse_emfgen(std::string_view document);

using EditorModel = std::variant<Metamodel, GraphModel, ToolingModel, MappingModel, EmfGenModel>;

/// Parses one of the five model kinds; throws ParseError if the document's
/// kind differs from `kind` or `kind` is not a model kind.
EditorModel parse_model(std::string_view document, ModelKind kind);

std::string serialize(const Metamodel& mm);
std::string serialize(const GraphModel& g);
std::string serialize(const ToolingModel& t);
std::string serialize(const MappingModel& m);
std::string serialize(const EmfGenModel& e);
std::string serialize_model(const EditorModel& m);

/// Canonical form of any supported document (model, diff, diffschema).
std::string canonicalize(std::string_view document);

}  // namespace coevo
