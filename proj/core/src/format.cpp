#include "coevo/format.hpp"

#include "coevo/diff.hpp"
#include "json_support.hpp"

namespace coevo {

using detail::as_string;
using detail::element_path;
using detail::Json;
using detail::ObjectReader;

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Metamodel: return "metamodel";
    case ModelKind::Graph: return "graph";
    case ModelKind::Tooling: return "tooling";
    case ModelKind::Mapping: return "mapping";
    case ModelKind::EmfGen: return "emfgen";
    case ModelKind::Diff: return "diff";
    case ModelKind::Blame: return "blame";
    case ModelKind::DiffSchema: return "diffschema";
    case ModelKind::Plan: return "plan";
  }
  return "metamodel";
}

std::optional<ModelKind> model_kind_from_string(std::string_view s) {
  for (auto k : {ModelKind::Metamodel, ModelKind::Graph, ModelKind::Tooling, ModelKind::Mapping,
                 ModelKind::EmfGen, ModelKind::Diff, ModelKind::Blame, ModelKind::DiffSchema,
                 ModelKind::Plan})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::string_view file_extension(ModelKind k) {
  switch (k) {
    case ModelKind::Metamodel: return ".mm.json";
    case ModelKind::Graph: return ".graph.json";
    case ModelKind::Tooling: return ".tool.json";
    case ModelKind::Mapping: return ".map.json";
    case ModelKind::EmfGen: return ".gen.json";
    case ModelKind::Diff: return ".diff.json";
    case ModelKind::Blame: return ".blame.json";
    case ModelKind::DiffSchema: return ".diffschema.json";
    case ModelKind::Plan: return ".plan.json";
  }
  return ".json";
}

std::optional<ModelKind> kind_from_path(std::string_view path) {
  for (auto k : {ModelKind::Metamodel, ModelKind::Graph, ModelKind::Tooling, ModelKind::Mapping,
                 ModelKind::EmfGen, ModelKind::Diff, ModelKind::Blame, ModelKind::Plan,
                 ModelKind::DiffSchema}) {
    const auto ext = file_extension(k);
    if (path.size() > ext.size() && path.substr(path.size() - ext.size()) == ext) return k;
  }
  return std::nullopt;
}

ModelKind peek_kind(std::string_view document) {
  const Json j = detail::parse_json(document);
  if (!j.is_object()) detail::schema_error("", "expected an object");
  auto it = j.find("kind");
  if (it == j.end()) detail::schema_error("/kind", "missing required field");
  const std::string kind = as_string(*it, "/kind");
  const auto k = model_kind_from_string(kind);
  if (!k) detail::schema_error("/kind", "unknown kind '" + kind + "'");
  return *k;
}

namespace {

[[noreturn]] void invariant_error(const std::string& what) {
  throw ParseError(ParseError::Kind::Invariant, "invariant violation: " + what);
}

template <typename Model>
Model checked(Model m) {
  if (auto e = check_invariants(m)) invariant_error(*e);
  return m;
}

std::vector<std::string> string_list(const Json& arr, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], element_path(path, i)));
  return out;
}

Json to_json(const FeatureRef& f) {
  Json j = Json::object();
  j["className"] = f.class_name;
  j["featureName"] = f.feature_name;
  j["recordedTypeName"] = f.recorded_type_name;
  return j;
}

FeatureRef feature_ref_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  FeatureRef f;
  f.class_name = r.string("className");
  f.feature_name = r.string("featureName");
  f.recorded_type_name = r.string("recordedTypeName");
  r.finish();
  return f;
}

Json to_json(const CanvasElement& e) {
  Json j = Json::object();
  j["name"] = e.name;
  j["figure"] = e.figure;
  return j;
}

std::vector<CanvasElement> canvas_elements(ObjectReader& r, std::string_view key) {
  std::vector<CanvasElement> out;
  const Json& arr = r.array(key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ObjectReader e(arr[i], element_path(r.path(key), i));
    out.push_back({e.string("name"), e.string("figure")});
    e.finish();
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Metamodel parse_metamodel(std::string_view document) {
  const Json j = detail::parse_json(document);
  ObjectReader r(j, "");
  detail::check_header(r, ModelKind::Metamodel);
  Metamodel mm;
  mm.name = r.string("name");
  const Json& classes = r.array("classes");
  for (std::size_t i = 0; i < classes.size(); ++i)
    mm.classes.push_back(detail::class_from_json(classes[i], element_path("/classes", i)));
  r.finish();
  return checked(std::move(mm));
}

std::string serialize(const Metamodel& mm) {
  Json j = detail::header(ModelKind::Metamodel);
  j["name"] = mm.name;
  Json classes = Json::array();
  for (const auto& c : mm.classes) classes.push_back(detail::to_json(c));
  j["classes"] = std::move(classes);
  return detail::dump(j);
}

GraphModel parse_graph(std::string_view document) {
  const Json j = detail::parse_json(document);
  ObjectReader r(j, "");
  detail::check_header(r, ModelKind::Graph);
  GraphModel g;
  const Json& figures = r.array("figures");
  for (std::size_t i = 0; i < figures.size(); ++i) {
    ObjectReader f(figures[i], element_path("/figures", i));
    FigureDef fig;
    fig.name = f.string("name");
    const std::string kind = f.string("kind");
    const auto k = figure_kind_from_string(kind);
    if (!k) detail::schema_error(f.path("kind"), "unknown figure kind '" + kind + "'");
    fig.kind = *k;
    f.finish();
    g.figures.push_back(std::move(fig));
  }
  g.nodes = canvas_elements(r, "nodes");
  g.connections = canvas_elements(r, "connections");
  g.diagram_labels = canvas_elements(r, "diagramLabels");
  r.finish();
  return checked(std::move(g));
}

std::string serialize(const GraphModel& g) {
  Json j = detail::header(ModelKind::Graph);
  Json figures = Json::array();
  for (const auto& f : g.figures) {
    Json fj = Json::object();
    fj["name"] = f.name;
    fj["kind"] = std::string(to_string(f.kind));
    figures.push_back(std::move(fj));
  }
  j["figures"] = std::move(figures);
  auto list = [](const std::vector<CanvasElement>& v) {
    Json arr = Json::array();
    for (const auto& e : v) arr.push_back(to_json(e));
    return arr;
  };
  j["nodes"] = list(g.nodes);
  j["connections"] = list(g.connections);
  j["diagramLabels"] = list(g.diagram_labels);
  return detail::dump(j);
}

ToolingModel parse_tooling(std::string_view document) {
  const Json j = detail::parse_json(document);
  ObjectReader r(j, "");
  detail::check_header(r, ModelKind::Tooling);
  ToolingModel t;
  const Json& palette = r.array("palette");
  for (std::size_t i = 0; i < palette.size(); ++i) {
    ObjectReader g(palette[i], element_path("/palette", i));
    ToolGroup group;
    group.name = g.string("name");
    const Json& tools = g.array("tools");
    for (std::size_t k = 0; k < tools.size(); ++k) {
      ObjectReader tr(tools[k], element_path(g.path("tools"), k));
      group.tools.push_back({tr.string("title"), tr.string("description")});
      tr.finish();
    }
    g.finish();
    t.palette.push_back(std::move(group));
  }
  r.finish();
  return checked(std::move(t));
}

std::string serialize(const ToolingModel& t) {
  Json j = detail::header(ModelKind::Tooling);
  Json palette = Json::array();
  for (const auto& g : t.palette) {
    Json gj = Json::object();
    gj["name"] = g.name;
    Json tools = Json::array();
    for (const auto& tool : g.tools) {
      Json tj = Json::object();
      tj["title"] = tool.title;
      tj["description"] = tool.description;
      tools.push_back(std::move(tj));
    }
    gj["tools"] = std::move(tools);
    palette.push_back(std::move(gj));
  }
  j["palette"] = std::move(palette);
  return detail::dump(j);
}

MappingModel parse_mapping(std::string_view document) {
  const Json j = detail::parse_json(document);
  ObjectReader r(j, "");
  detail::check_header(r, ModelKind::Mapping);
  MappingModel m;
  const Json& tnrs = r.array("topNodeReferences");
  for (std::size_t i = 0; i < tnrs.size(); ++i) {
    ObjectReader tr(tnrs[i], element_path("/topNodeReferences", i));
    TopNodeReference tnr;
    tnr.containment_feature =
        feature_ref_from_json(tr.required("containmentFeature"), tr.path("containmentFeature"));
    ObjectReader nr(tr.object("ownedChild"), tr.path("ownedChild"));
    NodeMapping& nm = tnr.owned_child;
    nm.domain_meta_element = nr.string("domainMetaElement");
    nm.tool = nr.string("tool");
    nm.diagram_node = nr.string("diagramNode");
    nm.related_diagrams = string_list(nr.array("relatedDiagrams"), nr.path("relatedDiagrams"));
    const Json& labels = nr.array("labelMappings");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      ObjectReader lr(labels[k], element_path(nr.path("labelMappings"), k));
      FeatureLabelMapping flm;
      const Json& features = lr.array("features");
      for (std::size_t f = 0; f < features.size(); ++f)
        flm.features.push_back(feature_ref_from_json(features[f], element_path(lr.path("features"), f)));
      flm.diagram_label = lr.string("diagramLabel");
      lr.finish();
      nm.label_mappings.push_back(std::move(flm));
    }
    nr.finish();
    tr.finish();
    m.top_node_references.push_back(std::move(tnr));
  }
  const Json& links = r.array("linkMappings");
  for (std::size_t i = 0; i < links.size(); ++i) {
    ObjectReader lr(links[i], element_path("/linkMappings", i));
    LinkMapping lm;
    lm.domain_meta_element = lr.string("domainMetaElement");
    lm.tool = lr.string("tool");
    lm.diagram_link = lr.string("diagramLink");
    lm.source_feature = feature_ref_from_json(lr.required("sourceFeature"), lr.path("sourceFeature"));
    lm.target_feature = feature_ref_from_json(lr.required("targetFeature"), lr.path("targetFeature"));
    lr.finish();
    m.link_mappings.push_back(std::move(lm));
  }
  r.finish();
  return checked(std::move(m));
}

std::string serialize(const MappingModel& m) {
  Json j = detail::header(ModelKind::Mapping);
  Json tnrs = Json::array();
  for (const auto& tnr : m.top_node_references) {
    Json tj = Json::object();
    tj["containmentFeature"] = to_json(tnr.containment_feature);
    const NodeMapping& nm = tnr.owned_child;
    Json nj = Json::object();
    nj["domainMetaElement"] = nm.domain_meta_element;
    nj["tool"] = nm.tool;
    nj["diagramNode"] = nm.diagram_node;
    nj["relatedDiagrams"] = nm.related_diagrams;
    Json labels = Json::array();
    for (const auto& flm : nm.label_mappings) {
      Json lj = Json::object();
      Json features = Json::array();
      for (const auto& f : flm.features) features.push_back(to_json(f));
      lj["features"] = std::move(features);
      lj["diagramLabel"] = flm.diagram_label;
      labels.push_back(std::move(lj));
    }
    nj["labelMappings"] = std::move(labels);
    tj["ownedChild"] = std::move(nj);
    tnrs.push_back(std::move(tj));
  }
  j["topNodeReferences"] = std::move(tnrs);
  Json links = Json::array();
  for (const auto& lm : m.link_mappings) {
    Json lj = Json::object();
    lj["domainMetaElement"] = lm.domain_meta_element;
    lj["tool"] = lm.tool;
    lj["diagramLink"] = lm.diagram_link;
    lj["sourceFeature"] = to_json(lm.source_feature);
    lj["targetFeature"] = to_json(lm.target_feature);
    links.push_back(std::move(lj));
  }
  j["linkMappings"] = std::move(links);
  return detail::dump(j);
}

EmfGenModel parse_emfgen(std::string_view document) {
  const Json j = detail::parse_json(document);
  ObjectReader r(j, "");
  detail::check_header(r, ModelKind::EmfGen);
  EmfGenModel e;
  e.package_prefix = r.string("packagePrefix");
  const Json& classes = r.array("genClasses");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ObjectReader gr(classes[i], element_path("/genClasses", i));
    GenClass g;
    g.class_name = gr.string("className");
    g.gen_features = string_list(gr.array("genFeatures"), gr.path("genFeatures"));
    gr.finish();
    e.gen_classes.push_back(std::move(g));
  }
  r.finish();
  return checked(std::move(e));
}

std::string serialize(const EmfGenModel& e) {
  Json j = detail::header(ModelKind::EmfGen);
  j["packagePrefix"] = e.package_prefix;
  Json classes = Json::array();
  for (const auto& g : e.gen_classes) {
    Json gj = Json::object();
    gj["className"] = g.class_name;
    gj["genFeatures"] = g.gen_features;
    classes.push_back(std::move(gj));
  }
  j["genClasses"] = std::move(classes);
  return detail::dump(j);
}

EditorModel parse_model(std::string_view document, ModelKind kind) {
  switch (kind) {
    case ModelKind::Metamodel: return parse_metamodel(document);
    case ModelKind::Graph: return parse_graph(document);
    case ModelKind::Tooling: return parse_tooling(document);
    case ModelKind::Mapping: return parse_mapping(document);
    case ModelKind::EmfGen: return parse_emfgen(document);
    default: break;
  }
  throw ParseError(ParseError::Kind::Schema,
                   "kind '" + std::string(to_string(kind)) + "' is not an editor model kind");
}

std::string serialize_model(const EditorModel& m) {
  return std::visit([](const auto& model) { return serialize(model); }, m);
}

std::string canonicalize(std::string_view document) {
  const ModelKind kind = peek_kind(document);
  switch (kind) {
    case ModelKind::Diff: return serialize(parse_diff(document));
    case ModelKind::DiffSchema: return serialize(parse_difference_schema(document));
    default: break;
  }
  return serialize_model(parse_model(document, kind));
}

}  // namespace coevo
