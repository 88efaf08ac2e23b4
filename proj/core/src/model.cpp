#include "coevo/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace coevo {

std::string_view to_string(PrimitiveType t) {
  switch (t) {
    case PrimitiveType::String: return "string";
    case PrimitiveType::Int: return "int";
    case PrimitiveType::Boolean: return "boolean";
    case PrimitiveType::Float: return "float";
  }
  return "string";
}

std::optional<PrimitiveType> primitive_from_string(std::string_view s) {
  if (s == "string") return PrimitiveType::String;
  if (s == "int") return PrimitiveType::Int;
  if (s == "boolean") return PrimitiveType::Boolean;
  if (s == "float") return PrimitiveType::Float;
  return std::nullopt;
}

std::string_view to_string(FigureKind k) {
  switch (k) {
    case FigureKind::Rectangle: return "Rectangle";
    case FigureKind::Ellipse: return "Ellipse";
    case FigureKind::Polyline: return "Polyline";
    case FigureKind::Label: return "Label";
  }
  return "Rectangle";
}

std::optional<FigureKind> figure_kind_from_string(std::string_view s) {
  if (s == "Rectangle") return FigureKind::Rectangle;
  if (s == "Ellipse") return FigureKind::Ellipse;
  if (s == "Polyline") return FigureKind::Polyline;
  if (s == "Label") return FigureKind::Label;
  return std::nullopt;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

// ---------------------------------------------------------------------------

const AttributeDef* ClassDef::find_attribute(std::string_view n) const {
  for (const auto& a : attributes)
    if (a.name == n) return &a;
  return nullptr;
}

const ReferenceDef* ClassDef::find_reference(std::string_view n) const {
  for (const auto& r : references)
    if (r.name == n) return &r;
  return nullptr;
}

ClassDef ClassDef::shell() const {
  ClassDef c;
  c.id = id;
  c.name = name;
  c.is_abstract = is_abstract;
  c.super_types = super_types;
  return c;
}

const ClassDef* Metamodel::find_class(std::string_view n) const {
  for (const auto& c : classes)
    if (c.name == n) return &c;
  return nullptr;
}

ClassDef* Metamodel::find_class(std::string_view n) {
  for (auto& c : classes)
    if (c.name == n) return &c;
  return nullptr;
}

std::vector<std::string> Metamodel::ancestors(std::string_view cls) const {
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen{std::string(cls)};
  std::function<void(std::string_view)> visit = [&](std::string_view n) {
    const ClassDef* c = find_class(n);
    if (c == nullptr) return;
    for (const auto& s : c->super_types) {
      if (!seen.insert(s).second) continue;
      if (find_class(s) == nullptr) continue;
      out.push_back(s);
      visit(s);
    }
  };
  visit(cls);
  return out;
}

bool Metamodel::is_ancestor(std::string_view ancestor, std::string_view cls) const {
  const auto anc = ancestors(cls);
  return std::find(anc.begin(), anc.end(), ancestor) != anc.end();
}

std::vector<std::string> Metamodel::descendants(std::string_view cls) const {
  std::vector<std::string> out;
  for (const auto& c : classes)
    if (c.name != cls && is_ancestor(cls, c.name)) out.push_back(c.name);
  return out;
}

std::vector<Metamodel::OwnedAttribute> Metamodel::all_attributes(std::string_view cls) const {
  // Post-order over supertypes: every class follows its own ancestors.
  std::vector<const ClassDef*> order;
  std::set<std::string, std::less<>> seen;
  std::function<void(std::string_view)> visit = [&](std::string_view n) {
    const ClassDef* c = find_class(n);
    if (c == nullptr || !seen.insert(c->name).second) return;
    for (const auto& s : c->super_types) visit(s);
    order.push_back(c);
  };
  visit(cls);
  std::vector<OwnedAttribute> out;
  for (const ClassDef* c : order)
    for (const auto& a : c->attributes) out.push_back({c->name, &a});
  return out;
}

std::optional<std::string> Metamodel::declared_feature_type(std::string_view owner,
                                                            std::string_view feature) const {
  const ClassDef* c = find_class(owner);
  if (c == nullptr) return std::nullopt;
  if (const auto* a = c->find_attribute(feature)) return std::string(to_string(a->type));
  if (const auto* r = c->find_reference(feature)) return r->target;
  return std::nullopt;
}

bool Metamodel::is_canvas(std::string_view cls) const {
  const ClassDef* c = find_class(cls);
  if (c == nullptr || c->is_abstract) return false;
  const bool owns_containment = std::any_of(c->references.begin(), c->references.end(),
                                            [](const ReferenceDef& r) { return r.containment; });
  if (!owns_containment) return false;
  for (const auto& other : classes) {
    for (const auto& r : other.references) {
      if (!r.containment) continue;
      if (r.target == cls || is_ancestor(r.target, cls)) return false;
    }
  }
  return true;
}

Metamodel canonical_order(Metamodel mm) {
  auto by_name = [](const auto& a, const auto& b) { return a.name < b.name; };
  std::sort(mm.classes.begin(), mm.classes.end(), by_name);
  for (auto& c : mm.classes) {
    std::sort(c.attributes.begin(), c.attributes.end(), by_name);
    std::sort(c.references.begin(), c.references.end(), by_name);
  }
  return mm;
}

// ---------------------------------------------------------------------------

namespace {

bool contains_name(const std::vector<CanvasElement>& v, std::string_view n) {
  return std::any_of(v.begin(), v.end(), [&](const CanvasElement& e) { return e.name == n; });
}

}  // namespace

bool GraphModel::has_node(std::string_view n) const { return contains_name(nodes, n); }
bool GraphModel::has_connection(std::string_view n) const { return contains_name(connections, n); }
bool GraphModel::has_label(std::string_view n) const { return contains_name(diagram_labels, n); }

const CreationTool* ToolingModel::find_tool(std::string_view title) const {
  for (const auto& g : palette)
    for (const auto& t : g.tools)
      if (t.title == title) return &t;
  return nullptr;
}

std::vector<std::string> ToolingModel::titles() const {
  std::vector<std::string> out;
  for (const auto& g : palette)
    for (const auto& t : g.tools) out.push_back(t.title);
  return out;
}

const GenClass* EmfGenModel::find(std::string_view class_name) const {
  for (const auto& g : gen_classes)
    if (g.class_name == class_name) return &g;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

std::optional<std::string> check_invariants(const Metamodel& mm) {
  if (!is_identifier(mm.name)) return "metamodel name '" + mm.name + "' is not an identifier";

  std::set<std::string, std::less<>> class_names;
  std::set<std::string, std::less<>> ids;
  auto claim_id = [&](const std::optional<std::string>& id,
                      const std::string& where) -> std::optional<std::string> {
    if (!id) return std::nullopt;
    if (id->empty()) return "empty id on " + where;
    if (!ids.insert(*id).second) return "duplicate id '" + *id + "' on " + where;
    return std::nullopt;
  };

  for (const auto& c : mm.classes) {
    if (!is_identifier(c.name)) return "class name '" + c.name + "' is not an identifier";
    if (!class_names.insert(c.name).second) return "duplicate class '" + c.name + "'";
    if (auto e = claim_id(c.id, "class " + c.name)) return e;
    for (const auto& a : c.attributes) {
      if (!is_identifier(a.name))
        return "attribute name '" + a.name + "' in class " + c.name + " is not an identifier";
      if (auto e = claim_id(a.id, "attribute " + c.name + "." + a.name)) return e;
    }
    for (const auto& r : c.references) {
      const std::string where = c.name + "." + r.name;
      if (!is_identifier(r.name)) return "reference name '" + where + "' is not an identifier";
      if (auto e = claim_id(r.id, "reference " + where)) return e;
      if (r.upper_bound && *r.upper_bound == 0) return "reference " + where + " has upper bound 0";
      if (r.upper_bound && r.lower_bound > *r.upper_bound)
        return "reference " + where + " has lower bound above upper bound";
    }
  }

  for (const auto& c : mm.classes) {
    std::set<std::string, std::less<>> seen;
    for (const auto& s : c.super_types) {
      if (!class_names.contains(s))
        return "supertype '" + s + "' of class " + c.name + " does not resolve";
      if (!seen.insert(s).second) return "class " + c.name + " lists supertype " + s + " twice";
    }
    for (const auto& r : c.references)
      if (!class_names.contains(r.target))
        return "target '" + r.target + "' of reference " + c.name + "." + r.name +
               " does not resolve";
  }

  // Cycle detection: white/grey/black DFS over supertype edges.
  std::map<std::string, int, std::less<>> colour;
  std::optional<std::string> cycle;
  std::function<void(const ClassDef&)> dfs = [&](const ClassDef& c) {
    colour[c.name] = 1;
    for (const auto& s : c.super_types) {
      if (cycle) return;
      const int st = colour[s];
      if (st == 1) {
        cycle = "inheritance cycle through class " + s;
        return;
      }
      if (st == 0) dfs(*mm.find_class(s));
    }
    colour[c.name] = 2;
  };
  for (const auto& c : mm.classes) {
    if (colour[c.name] == 0) dfs(c);
    if (cycle) return cycle;
  }

  for (const auto& c : mm.classes) {
    std::set<std::string, std::less<>> features;
    auto lineage = mm.ancestors(c.name);
    lineage.push_back(c.name);
    for (const auto& n : lineage) {
      const ClassDef* k = mm.find_class(n);
      for (const auto& a : k->attributes)
        if (!features.insert(a.name).second)
          return "feature '" + a.name + "' is declared twice in the hierarchy of class " + c.name;
      for (const auto& r : k->references)
        if (!features.insert(r.name).second)
          return "feature '" + r.name + "' is declared twice in the hierarchy of class " + c.name;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_invariants(const GraphModel& g) {
  std::set<std::string, std::less<>> figures;
  for (const auto& f : g.figures) {
    if (f.name.empty()) return std::string("figure with empty name");
    if (!figures.insert(f.name).second) return "duplicate figure '" + f.name + "'";
  }
  auto check = [&](const std::vector<CanvasElement>& v,
                   std::string_view category) -> std::optional<std::string> {
    std::set<std::string, std::less<>> names;
    for (const auto& e : v) {
      if (e.name.empty()) return std::string(category) + " with empty name";
      if (!names.insert(e.name).second)
        return "duplicate " + std::string(category) + " '" + e.name + "'";
      if (!figures.contains(e.figure))
        return std::string(category) + " '" + e.name + "' uses unknown figure '" + e.figure + "'";
    }
    return std::nullopt;
  };
  if (auto e = check(g.nodes, "node")) return e;
  if (auto e = check(g.connections, "connection")) return e;
  if (auto e = check(g.diagram_labels, "diagram label")) return e;
  return std::nullopt;
}

std::optional<std::string> check_invariants(const ToolingModel& t) {
  std::set<std::string, std::less<>> titles;
  for (const auto& g : t.palette) {
    for (const auto& tool : g.tools) {
      if (tool.title.empty()) return "tool with empty title in group '" + g.name + "'";
      if (!titles.insert(tool.title).second) return "duplicate tool title '" + tool.title + "'";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_invariants(const MappingModel& m) {
  auto ref_ok = [](const FeatureRef& f) {
    return !f.class_name.empty() && !f.feature_name.empty();
  };
  for (std::size_t i = 0; i < m.top_node_references.size(); ++i) {
    const auto& tnr = m.top_node_references[i];
    const std::string where = "topNodeReferences[" + std::to_string(i) + "]";
    if (!ref_ok(tnr.containment_feature)) return where + " has an incomplete containmentFeature";
    if (tnr.owned_child.domain_meta_element.empty())
      return where + " has an empty domainMetaElement";
    for (const auto& lm : tnr.owned_child.label_mappings) {
      if (lm.features.empty()) return where + " has a label mapping without features";
      for (const auto& f : lm.features)
        if (!ref_ok(f)) return where + " has an incomplete feature reference";
    }
  }
  for (std::size_t i = 0; i < m.link_mappings.size(); ++i) {
    const auto& lm = m.link_mappings[i];
    const std::string where = "linkMappings[" + std::to_string(i) + "]";
    if (lm.domain_meta_element.empty()) return where + " has an empty domainMetaElement";
    if (!ref_ok(lm.source_feature) || !ref_ok(lm.target_feature))
      return where + " has an incomplete feature reference";
  }
  return std::nullopt;
}

std::optional<std::string> check_invariants(const EmfGenModel& e) {
  std::set<std::string, std::less<>> names;
  for (const auto& g : e.gen_classes) {
    if (g.class_name.empty()) return std::string("genClass with empty className");
    if (!names.insert(g.class_name).second) return "duplicate genClass '" + g.class_name + "'";
  }
  return std::nullopt;
}

}  // namespace coevo
