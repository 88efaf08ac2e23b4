#include "json_support.hpp"

#include <algorithm>

namespace coevo::detail {

namespace {

void position_of(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& col) {
  line = 1;
  col = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 0;
    std::size_t col = 0;
    // nlohmann reports the 1-based byte index of the offending character.
    position_of(text, e.byte == 0 ? 0 : e.byte - 1, line, col);
    throw ParseError(ParseError::Kind::Syntax,
                     "syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col),
                     line, col);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(ParseError::Kind::Schema, (path.empty() ? "/" : path) + ": " + what);
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::string element_path(const std::string& parent, std::size_t index) {
  return parent + "/" + std::to_string(index);
}

ObjectReader::ObjectReader(const Json& j, std::string path) : json_(j), path_(std::move(path)) {
  if (!json_.is_object()) schema_error(path_, "expected an object");
}

const Json& ObjectReader::required(std::string_view key) {
  const Json* j = optional(key);
  if (j == nullptr) schema_error(path(key), "missing required field");
  return *j;
}

const Json* ObjectReader::optional(std::string_view key) {
  auto it = json_.find(std::string(key));
  if (it == json_.end()) return nullptr;
  seen_.emplace(key);
  return &*it;
}

std::string ObjectReader::string(std::string_view key) {
  return as_string(required(key), path(key));
}

std::optional<std::string> ObjectReader::optional_string(std::string_view key) {
  const Json* j = optional(key);
  if (j == nullptr) return std::nullopt;
  return as_string(*j, path(key));
}

bool ObjectReader::boolean(std::string_view key) {
  const Json& j = required(key);
  if (!j.is_boolean()) schema_error(path(key), "expected a boolean");
  return j.get<bool>();
}

std::uint32_t ObjectReader::uint(std::string_view key) {
  const Json& j = required(key);
  if (!j.is_number_unsigned()) schema_error(path(key), "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffULL) schema_error(path(key), "integer out of range");
  return static_cast<std::uint32_t>(v);
}

const Json& ObjectReader::array(std::string_view key) {
  const Json& j = required(key);
  if (!j.is_array()) schema_error(path(key), "expected an array");
  return j;
}

const Json& ObjectReader::object(std::string_view key) {
  const Json& j = required(key);
  if (!j.is_object()) schema_error(path(key), "expected an object");
  return j;
}

void ObjectReader::finish() const {
  for (auto it = json_.begin(); it != json_.end(); ++it)
    if (!seen_.contains(it.key())) schema_error(path(it.key()), "unknown field");
}

Json header(ModelKind kind) {
  Json j = Json::object();
  j["formatVersion"] = std::string(kFormatVersion);
  j["kind"] = std::string(to_string(kind));
  return j;
}

void check_header(ObjectReader& r, ModelKind expected) {
  const std::string version = r.string("formatVersion");
  if (version != kFormatVersion)
    throw ParseError(ParseError::Kind::Version, "unsupported formatVersion '" + version + "'");
  const std::string kind = r.string("kind");
  if (kind != to_string(expected))
    schema_error(r.path("kind"),
                 "expected kind '" + std::string(to_string(expected)) + "', found '" + kind + "'");
}

// ---------------------------------------------------------------------------

Json to_json(const AttributeDef& a) {
  Json j = Json::object();
  if (a.id) j["id"] = *a.id;
  j["name"] = a.name;
  j["type"] = std::string(to_string(a.type));
  return j;
}

AttributeDef attribute_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  AttributeDef a;
  a.id = r.optional_string("id");
  a.name = r.string("name");
  const std::string type = r.string("type");
  const auto t = primitive_from_string(type);
  if (!t) schema_error(r.path("type"), "unknown primitive type '" + type + "'");
  a.type = *t;
  r.finish();
  return a;
}

Json to_json(const ReferenceDef& ref) {
  Json j = Json::object();
  if (ref.id) j["id"] = *ref.id;
  j["name"] = ref.name;
  j["target"] = ref.target;
  j["containment"] = ref.containment;
  j["lowerBound"] = ref.lower_bound;
  if (ref.upper_bound)
    j["upperBound"] = *ref.upper_bound;
  else
    j["upperBound"] = "unbounded";
  return j;
}

ReferenceDef reference_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  ReferenceDef ref;
  ref.id = r.optional_string("id");
  ref.name = r.string("name");
  ref.target = r.string("target");
  ref.containment = r.boolean("containment");
  ref.lower_bound = r.uint("lowerBound");
  const Json& upper = r.required("upperBound");
  if (upper.is_string() && upper.get<std::string>() == "unbounded") {
    ref.upper_bound = std::nullopt;
  } else if (upper.is_number_unsigned()) {
    const auto v = upper.get<std::uint64_t>();
    if (v == 0 || v > 0xffffffffULL)
      schema_error(r.path("upperBound"), "upper bound must be positive");
    ref.upper_bound = static_cast<std::uint32_t>(v);
  } else {
    schema_error(r.path("upperBound"), "expected a positive integer or \"unbounded\"");
  }
  r.finish();
  return ref;
}

Json to_json(const ClassDef& c) {
  Json j = Json::object();
  if (c.id) j["id"] = *c.id;
  j["name"] = c.name;
  j["abstract"] = c.is_abstract;
  j["superTypes"] = c.super_types;
  Json attrs = Json::array();
  for (const auto& a : c.attributes) attrs.push_back(to_json(a));
  j["attributes"] = std::move(attrs);
  Json refs = Json::array();
  for (const auto& r : c.references) refs.push_back(to_json(r));
  j["references"] = std::move(refs);
  return j;
}

ClassDef class_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  ClassDef c;
  c.id = r.optional_string("id");
  c.name = r.string("name");
  c.is_abstract = r.boolean("abstract");
  const Json& supers = r.array("superTypes");
  for (std::size_t i = 0; i < supers.size(); ++i)
    c.super_types.push_back(as_string(supers[i], element_path(r.path("superTypes"), i)));
  const Json& attrs = r.array("attributes");
  for (std::size_t i = 0; i < attrs.size(); ++i)
    c.attributes.push_back(attribute_from_json(attrs[i], element_path(r.path("attributes"), i)));
  const Json& refs = r.array("references");
  for (std::size_t i = 0; i < refs.size(); ++i)
    c.references.push_back(reference_from_json(refs[i], element_path(r.path("references"), i)));
  r.finish();
  return c;
}

}  // namespace coevo::detail
