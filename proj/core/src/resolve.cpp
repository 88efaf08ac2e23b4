#include "coevo/resolve.hpp"

namespace coevo {

std::string_view to_string(LinkKind k) {
  switch (k) {
    case LinkKind::DomainClass: return "class";
    case LinkKind::DomainFeature: return "feature";
    case LinkKind::Tool: return "tool";
    case LinkKind::GraphNode: return "node";
    case LinkKind::GraphConnection: return "connection";
    case LinkKind::GraphLabel: return "label";
  }
  return "class";
}

std::vector<Link> ResolutionTable::dangling() const {
  std::vector<Link> out;
  for (const auto& l : links)
    if (!l.resolved) out.push_back(l);
  return out;
}

std::size_t ResolutionTable::dangling_count(std::optional<ModelKind> source) const {
  std::size_t n = 0;
  for (const auto& l : links)
    if (!l.resolved && (!source || l.source == *source)) ++n;
  return n;
}

namespace {

class Resolver {
 public:
  explicit Resolver(const EditorModelSet& set) : set_(set) {}

  ResolutionTable run() {
    const auto& m = set_.mapping;
    for (std::size_t i = 0; i < m.top_node_references.size(); ++i) {
      const auto& top = m.top_node_references[i];
      const std::string base = "/topNodeReferences/" + std::to_string(i);
      feature(base + "/containmentFeature", top.containment_feature);
      node_mapping(base + "/ownedChild", top.owned_child);
    }
    for (std::size_t i = 0; i < m.link_mappings.size(); ++i) {
      const auto& lm = m.link_mappings[i];
      const std::string base = "/linkMappings/" + std::to_string(i);
      cls(base + "/domainMetaElement", lm.domain_meta_element);
      tool(base + "/tool", lm.tool);
      add(ModelKind::Mapping, base + "/diagramLink", LinkKind::GraphConnection, lm.diagram_link,
          set_.graph.has_connection(lm.diagram_link));
      feature(base + "/sourceFeature", lm.source_feature);
      feature(base + "/targetFeature", lm.target_feature);
    }

    const auto& gen = set_.emfgen.gen_classes;
    for (std::size_t i = 0; i < gen.size(); ++i) {
      const std::string base = "/genClasses/" + std::to_string(i);
      const ClassDef* c = set_.domain.find_class(gen[i].class_name);
      add(ModelKind::EmfGen, base + "/className", LinkKind::DomainClass, gen[i].class_name, c != nullptr);
      for (std::size_t j = 0; j < gen[i].gen_features.size(); ++j) {
        const auto& f = gen[i].gen_features[j];
        add(ModelKind::EmfGen, base + "/genFeatures/" + std::to_string(j), LinkKind::DomainFeature,
            gen[i].class_name + "." + f, c && c->declares(f));
      }
    }
    return std::move(table_);
  }

 private:
  void add(ModelKind source, std::string path, LinkKind kind, std::string target, bool ok) {
    table_.links.push_back({source, std::move(path), kind, std::move(target), ok});
  }

  void cls(const std::string& path, const std::string& name) {
    add(ModelKind::Mapping, path, LinkKind::DomainClass, name, set_.domain.find_class(name) != nullptr);
  }

  void tool(const std::string& path, const std::string& title) {
    if (title.empty()) return;
    add(ModelKind::Mapping, path, LinkKind::Tool, title, set_.tooling.find_tool(title) != nullptr);
  }

  void feature(const std::string& path, const FeatureRef& f) {
    const ClassDef* c = set_.domain.find_class(f.class_name);
    add(ModelKind::Mapping, path, LinkKind::DomainFeature, f.qualified(), c && c->declares(f.feature_name));
  }

  void node_mapping(const std::string& base, const NodeMapping& nm) {
    cls(base + "/domainMetaElement", nm.domain_meta_element);
    tool(base + "/tool", nm.tool);
    add(ModelKind::Mapping, base + "/diagramNode", LinkKind::GraphNode, nm.diagram_node,
        set_.graph.has_node(nm.diagram_node));
    for (std::size_t i = 0; i < nm.label_mappings.size(); ++i) {
      const auto& lm = nm.label_mappings[i];
      const std::string lbase = base + "/labelMappings/" + std::to_string(i);
      for (std::size_t j = 0; j < lm.features.size(); ++j)
        feature(lbase + "/features/" + std::to_string(j), lm.features[j]);
      add(ModelKind::Mapping, lbase + "/diagramLabel", LinkKind::GraphLabel, lm.diagram_label,
          set_.graph.has_label(lm.diagram_label));
    }
  }

  const EditorModelSet& set_;
  ResolutionTable table_;
};

}  // namespace

ResolutionTable resolve(const EditorModelSet& set) { return Resolver(set).run(); }

}  // namespace coevo
