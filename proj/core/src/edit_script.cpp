#include "coevo/edit_script.hpp"

#include <algorithm>
#include <sstream>

#include "coevo/errors.hpp"
#include "json_support.hpp"

namespace coevo {

std::vector<EditOp> parse_edit_script(std::string_view json_array) {
  const detail::Json j = detail::parse_json(json_array);
  if (!j.is_array()) detail::schema_error("", "edit script must be an array");
  std::vector<EditOp> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& item = j[i];
    const std::string path = detail::element_path("", i);
    if (!item.is_object()) detail::schema_error(path, "edit must be an object");
    EditOp op;
    for (const auto& [key, value] : item.items()) {
      std::string text;
      if (value.is_string())
        text = value.get<std::string>();
      else if (value.is_array()) {
        for (const auto& v : value) text += (text.empty() ? "" : ",") + detail::as_string(v, path + "/" + key);
      } else if (value.is_boolean() || value.is_number_integer())
        text = value.dump();
      else
        detail::schema_error(path + "/" + key, "unsupported argument value");
      if (key == "op")
        op.op = std::move(text);
      else
        op.args[key] = std::move(text);
    }
    if (op.op.empty()) detail::schema_error(path, "missing 'op'");
    out.push_back(std::move(op));
  }
  return out;
}

namespace {

[[noreturn]] void fail(const EditOp& op, const std::string& what) {
  throw ParseError(ParseError::Kind::Schema, "edit '" + op.op + "': " + what);
}

const std::string& arg(const EditOp& op, const std::string& key) {
  auto it = op.args.find(key);
  if (it == op.args.end()) fail(op, "missing argument '" + key + "'");
  return it->second;
}

std::string arg_or(const EditOp& op, const std::string& key, std::string fallback) {
  auto it = op.args.find(key);
  return it == op.args.end() ? fallback : it->second;
}

std::optional<std::string> opt_arg(const EditOp& op, const std::string& key) {
  auto it = op.args.find(key);
  if (it == op.args.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

ClassDef& class_of(Metamodel& mm, const EditOp& op, const std::string& key) {
  ClassDef* c = mm.find_class(arg(op, key));
  if (!c) fail(op, "no class '" + arg(op, key) + "'");
  return *c;
}

PrimitiveType type_of(const EditOp& op) {
  auto t = primitive_from_string(arg(op, "type"));
  if (!t) fail(op, "unknown type '" + arg(op, "type") + "'");
  return *t;
}

std::uint32_t to_uint(const EditOp& op, const std::string& s) {
  try {
    return static_cast<std::uint32_t>(std::stoul(s));
  } catch (const std::exception&) {
    fail(op, "not a number: '" + s + "'");
  }
}

void apply(Metamodel& mm, const EditOp& op) {
  if (op.op == "addClass") {
    ClassDef c;
    c.id = opt_arg(op, "id");
    c.name = arg(op, "name");
    c.is_abstract = arg_or(op, "abstract", "false") == "true";
    c.super_types = split(arg_or(op, "superTypes", ""));
    mm.classes.push_back(std::move(c));
  } else if (op.op == "deleteClass") {
    const std::string name = class_of(mm, op, "name").name;
    std::erase_if(mm.classes, [&](const ClassDef& c) { return c.name == name; });
  } else if (op.op == "renameClass") {
    const std::string from = class_of(mm, op, "name").name;
    const std::string& to = arg(op, "newName");
    for (auto& c : mm.classes) {
      if (c.name == from) c.name = to;
      for (auto& s : c.super_types)
        if (s == from) s = to;
      for (auto& r : c.references)
        if (r.target == from) r.target = to;
    }
  } else if (op.op == "setAbstract") {
    class_of(mm, op, "class").is_abstract = arg(op, "abstract") == "true";
  } else if (op.op == "addSuperType") {
    class_of(mm, op, "class").super_types.push_back(arg(op, "superType"));
  } else if (op.op == "addAttribute") {
    class_of(mm, op, "class").attributes.push_back({opt_arg(op, "id"), arg(op, "name"), type_of(op)});
  } else if (op.op == "addReference") {
    ReferenceDef r;
    r.id = opt_arg(op, "id");
    r.name = arg(op, "name");
    r.target = arg(op, "target");
    r.containment = arg_or(op, "containment", "false") == "true";
    r.lower_bound = to_uint(op, arg_or(op, "lowerBound", "0"));
    const std::string upper = arg_or(op, "upperBound", "unbounded");
    if (upper != "unbounded") r.upper_bound = to_uint(op, upper);
    class_of(mm, op, "class").references.push_back(std::move(r));
  } else if (op.op == "deleteFeature") {
    ClassDef& c = class_of(mm, op, "class");
    const std::string& name = arg(op, "name");
    if (!c.declares(name)) fail(op, "no feature '" + name + "' in " + c.name);
    std::erase_if(c.attributes, [&](const AttributeDef& a) { return a.name == name; });
    std::erase_if(c.references, [&](const ReferenceDef& r) { return r.name == name; });
  } else if (op.op == "renameFeature") {
    ClassDef& c = class_of(mm, op, "class");
    const std::string& name = arg(op, "name");
    if (!c.declares(name)) fail(op, "no feature '" + name + "' in " + c.name);
    for (auto& a : c.attributes)
      if (a.name == name) a.name = arg(op, "newName");
    for (auto& r : c.references)
      if (r.name == name) r.name = arg(op, "newName");
  } else if (op.op == "moveFeature") {
    ClassDef& from = class_of(mm, op, "class");
    const std::string& name = arg(op, "name");
    if (!from.declares(name)) fail(op, "no feature '" + name + "' in " + from.name);
    std::optional<AttributeDef> a;
    std::optional<ReferenceDef> r;
    if (const AttributeDef* x = from.find_attribute(name)) a = *x;
    if (const ReferenceDef* x = from.find_reference(name)) r = *x;
    std::erase_if(from.attributes, [&](const AttributeDef& x) { return x.name == name; });
    std::erase_if(from.references, [&](const ReferenceDef& x) { return x.name == name; });
    ClassDef& to = class_of(mm, op, "to");
    if (a) to.attributes.push_back(*a);
    if (r) to.references.push_back(*r);
  } else if (op.op == "changeAttributeType") {
    ClassDef& c = class_of(mm, op, "class");
    auto it = std::find_if(c.attributes.begin(), c.attributes.end(),
                           [&](const AttributeDef& a) { return a.name == arg(op, "name"); });
    if (it == c.attributes.end()) fail(op, "no attribute '" + arg(op, "name") + "' in " + c.name);
    it->type = type_of(op);
  } else if (op.op == "retargetReference") {
    ClassDef& c = class_of(mm, op, "class");
    auto it = std::find_if(c.references.begin(), c.references.end(),
                           [&](const ReferenceDef& r) { return r.name == arg(op, "name"); });
    if (it == c.references.end()) fail(op, "no reference '" + arg(op, "name") + "' in " + c.name);
    it->target = arg(op, "target");
  } else {
    fail(op, "unknown operation");
  }
}

}  // namespace

Metamodel apply_edit_script(Metamodel mm, const std::vector<EditOp>& script) {
  for (const auto& op : script) apply(mm, op);
  if (auto err = check_invariants(mm))
    throw ParseError(ParseError::Kind::Invariant, "edit script result: " + *err);
  return mm;
}

}  // namespace coevo
