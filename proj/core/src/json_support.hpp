// Internal helpers for strict, path-reporting JSON reading and canonical
// writing. Not installed.
#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "coevo/errors.hpp"
#include "coevo/format.hpp"

namespace coevo::detail {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors carry 1-based line and column.
Json parse_json(std::string_view text);

/// Canonical text: 2-space indent, UTF-8, trailing LF.
std::string dump(const Json& j);

[[noreturn]] void schema_error(const std::string& path, const std::string& what);

/// Reads fields of one JSON object, rejecting unknown keys on finish().
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string path);

  const Json& required(std::string_view key);
  const Json* optional(std::string_view key);

  std::string string(std::string_view key);
  std::optional<std::string> optional_string(std::string_view key);
  bool boolean(std::string_view key);
  std::uint32_t uint(std::string_view key);
  const Json& array(std::string_view key);
  const Json& object(std::string_view key);

  std::string path(std::string_view key) const { return path_ + "/" + std::string(key); }
  const std::string& path() const { return path_; }

  /// Throws if the object holds keys that were never read.
  void finish() const;

 private:
  const Json& json_;
  std::string path_;
  std::set<std::string, std::less<>> seen_;
};

std::string as_string(const Json& j, const std::string& path);
std::string element_path(const std::string& parent, std::size_t index);

Json header(ModelKind kind);
/// Validates formatVersion and kind of a top-level document.
void check_header(ObjectReader& r, ModelKind expected);

// Shared fragments used by several document kinds.
Json to_json(const ClassDef& c);
ClassDef class_from_json(const Json& j, const std::string& path);
Json to_json(const AttributeDef& a);
AttributeDef attribute_from_json(const Json& j, const std::string& path);
Json to_json(const ReferenceDef& r);
ReferenceDef reference_from_json(const Json& j, const std::string& path);

}  // namespace coevo::detail
