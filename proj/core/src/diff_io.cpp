#include "coevo/diff.hpp"
#include "coevo/errors.hpp"
#include "json_support.hpp"

namespace coevo {

using detail::element_path;
using detail::Json;
using detail::ObjectReader;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json entry_to_json(const DiffEntry& e) {
  Json j = Json::object();
  j["type"] = std::string(to_string(kind_of(e)));
  std::visit(overloaded{
                 [&](const AddedClass& x) { j["element"] = detail::to_json(x.element); },
                 [&](const DeletedClass& x) { j["element"] = detail::to_json(x.element); },
                 [&](const ChangedClass& x) {
                   j["element"] = detail::to_json(x.element);
                   j["updatedElement"] = detail::to_json(x.updated);
                 },
                 [&](const auto& x) {
                   j["owner"] = x.owner;
                   j["element"] = detail::to_json(x.element);
                   if constexpr (requires { x.new_owner; }) {
                     j["newOwner"] = x.new_owner;
                     j["updatedElement"] = detail::to_json(x.updated);
                   }
                 },
             },
             e);
  return j;
}

DiffEntry entry_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  const std::string type = r.string("type");
  const auto kind = entry_kind_from_string(type);
  if (!kind) detail::schema_error(r.path("type"), "unknown entry type '" + type + "'");

  auto cls = [&](std::string_view key) { return detail::class_from_json(r.required(key), r.path(key)); };
  auto attr = [&](std::string_view key) {
    return detail::attribute_from_json(r.required(key), r.path(key));
  };
  auto ref = [&](std::string_view key) {
    return detail::reference_from_json(r.required(key), r.path(key));
  };

  DiffEntry e;
  switch (*kind) {
    case EntryKind::AddedClass: e = AddedClass{cls("element")}; break;
    case EntryKind::DeletedClass: e = DeletedClass{cls("element")}; break;
    case EntryKind::ChangedClass: {
      ClassDef o = cls("element");
      e = ChangedClass{std::move(o), cls("updatedElement")};
      break;
    }
    case EntryKind::AddedAttribute: {
      std::string owner = r.string("owner");
      e = AddedAttribute{std::move(owner), attr("element")};
      break;
    }
    case EntryKind::DeletedAttribute: {
      std::string owner = r.string("owner");
      e = DeletedAttribute{std::move(owner), attr("element")};
      break;
    }
    case EntryKind::ChangedAttribute: {
      ChangedAttribute c;
      c.owner = r.string("owner");
      c.element = attr("element");
      c.new_owner = r.string("newOwner");
      c.updated = attr("updatedElement");
      e = std::move(c);
      break;
    }
    case EntryKind::AddedReference: {
      std::string owner = r.string("owner");
      e = AddedReference{std::move(owner), ref("element")};
      break;
    }
    case EntryKind::DeletedReference: {
      std::string owner = r.string("owner");
      e = DeletedReference{std::move(owner), ref("element")};
      break;
    }
    case EntryKind::ChangedReference: {
      ChangedReference c;
      c.owner = r.string("owner");
      c.element = ref("element");
      c.new_owner = r.string("newOwner");
      c.updated = ref("updatedElement");
      e = std::move(c);
      break;
    }
  }
  r.finish();
  return e;
}

}  // namespace

std::string serialize(const DiffModel& d) {
  Json j = detail::header(ModelKind::Diff);
  Json entries = Json::array();
  for (const auto& e : d.entries) entries.push_back(entry_to_json(e));
  j["entries"] = std::move(entries);
  return detail::dump(j);
}

DiffModel parse_diff(std::string_view document) {
  const Json j = detail::parse_json(document);
  ObjectReader r(j, "");
  detail::check_header(r, ModelKind::Diff);
  DiffModel d;
  const Json& entries = r.array("entries");
  for (std::size_t i = 0; i < entries.size(); ++i)
    d.entries.push_back(entry_from_json(entries[i], element_path("/entries", i)));
  r.finish();
  return d;
}

// ---------------------------------------------------------------------------

DifferenceSchema derive_difference_schema(const Metamodel& source) {
  DifferenceSchema schema;
  schema.name = source.name + "Diff";
  for (const auto& mc : source.classes) {
    ClassDef added;
    added.name = "Added" + mc.name;
    added.super_types = {mc.name};
    ClassDef deleted;
    deleted.name = "Deleted" + mc.name;
    deleted.super_types = {mc.name};
    ClassDef changed;
    changed.name = "Changed" + mc.name;
    changed.super_types = {mc.name};
    ReferenceDef updated;
    updated.name = "updatedElement";
    updated.target = mc.name;
    updated.lower_bound = 1;
    updated.upper_bound = 1;
    changed.references.push_back(std::move(updated));
    schema.classes.push_back(std::move(added));
    schema.classes.push_back(std::move(deleted));
    schema.classes.push_back(std::move(changed));
  }
  return schema;
}

std::string serialize(const DifferenceSchema& s) {
  Json j = detail::header(ModelKind::DiffSchema);
  j["name"] = s.name;
  Json classes = Json::array();
  for (const auto& c : s.classes) classes.push_back(detail::to_json(c));
  j["classes"] = std::move(classes);
  return detail::dump(j);
}

DifferenceSchema parse_difference_schema(std::string_view document) {
  const Json j = detail::parse_json(document);
  ObjectReader r(j, "");
  detail::check_header(r, ModelKind::DiffSchema);
  DifferenceSchema s;
  s.name = r.string("name");
  const Json& classes = r.array("classes");
  for (std::size_t i = 0; i < classes.size(); ++i)
    s.classes.push_back(detail::class_from_json(classes[i], element_path("/classes", i)));
  r.finish();
  return s;
}

const Metamodel& ecore_subset() {
  static const Metamodel mm = [] {
    auto attr = [](std::string name, PrimitiveType t) {
      return AttributeDef{std::nullopt, std::move(name), t};
    };
    auto ref = [](std::string name, std::string target, bool containment, UpperBound upper) {
      return ReferenceDef{std::nullopt, std::move(name), std::move(target), containment, 0, upper};
    };
    Metamodel m;
    m.name = "ecore";
    ClassDef eclass;
    eclass.name = "EClass";
    eclass.attributes = {attr("name", PrimitiveType::String), attr("abstract", PrimitiveType::Boolean)};
    eclass.references = {ref("eSuperTypes", "EClass", false, std::nullopt),
                         ref("eAttributes", "EAttribute", true, std::nullopt),
                         ref("eReferences", "EReference", true, std::nullopt)};
    ClassDef eattr;
    eattr.name = "EAttribute";
    eattr.attributes = {attr("name", PrimitiveType::String),
                        attr("eAttributeType", PrimitiveType::String)};
    eattr.references = {ref("eContainingClass", "EClass", false, 1)};
    ClassDef eref;
    eref.name = "EReference";
    eref.attributes = {attr("name", PrimitiveType::String),
                       attr("containment", PrimitiveType::Boolean),
                       attr("lowerBound", PrimitiveType::Int), attr("upperBound", PrimitiveType::Int)};
    eref.references = {ref("eReferenceType", "EClass", false, 1),
                       ref("eContainingClass", "EClass", false, 1)};
    m.classes = {std::move(eclass), std::move(eattr), std::move(eref)};
    return m;
  }();
  return mm;
}

}  // namespace coevo
