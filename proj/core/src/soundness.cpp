#include "coevo/soundness.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "coevo/adapt.hpp"

namespace coevo {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Gap: return "gap";
    case Verdict::Broken: return "broken";
  }
  return "ok";
}

std::string_view symbol(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "•";
    case Verdict::Gap: return "○";
    case Verdict::Broken: return "×";
  }
  return "•";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::Ok, Verdict::Gap, Verdict::Broken})
    if (s == to_string(v) || s == symbol(v)) return v;
  return std::nullopt;
}

int soundness_level(const Verdicts& v) {
  if (std::find(v.begin(), v.end(), Verdict::Broken) != v.end()) return 1;
  if (std::find(v.begin(), v.end(), Verdict::Gap) != v.end()) return 2;
  return 3;
}

Verdict BlameReport::verdict(ModelKind m) const {
  for (std::size_t i = 0; i < kBlamedModels.size(); ++i)
    if (kBlamedModels[i] == m) return per_model[i];
  return Verdict::Ok;
}

namespace {

std::size_t model_index(ModelKind m) {
  return static_cast<std::size_t>(std::find(kBlamedModels.begin(), kBlamedModels.end(), m) -
                                  kBlamedModels.begin());
}

std::string capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

/// Name of the diagram label expected for an attribute.
std::string label_name(std::string_view owner, std::string_view attribute) {
  return std::string(owner) + capitalized(std::string(attribute));
}

class Validator {
 public:
  Validator(const EditorModelSet& set, const Trace* trace)
      : set_(set), domain_(set.domain), trace_(trace) {
    for (const auto& top : set.mapping.top_node_references) nodes_.push_back(&top.owned_child);
  }

  BlameReport run() {
    check_emfgen();
    check_graph();
    check_tooling();
    check_mapping();

    BlameReport r;
    std::sort(findings_.begin(), findings_.end(), [](const Finding& a, const Finding& b) {
      return std::tuple(model_index(a.model), a.code, a.subject, a.message) <
             std::tuple(model_index(b.model), b.code, b.subject, b.message);
    });
    findings_.erase(std::unique(findings_.begin(), findings_.end()), findings_.end());
    for (const auto& f : findings_) {
      Verdict& v = r.per_model[model_index(f.model)];
      const Verdict fv = f.severity == Severity::Broken ? Verdict::Broken : Verdict::Gap;
      if (static_cast<int>(fv) > static_cast<int>(v)) v = fv;
    }
    r.level = soundness_level(r.per_model);
    r.findings = std::move(findings_);
    return r;
  }

 private:
  void broken(ModelKind m, std::string code, std::string subject, std::string message) {
    findings_.push_back({Severity::Broken, m, std::move(code), std::move(subject), std::move(message)});
  }
  void gap(ModelKind m, std::string code, std::string subject, std::string message) {
    findings_.push_back({Severity::Gap, m, std::move(code), std::move(subject), std::move(message)});
  }

  // -- shared lookups --------------------------------------------------------

  bool class_resolves(const std::string& name) const { return domain_.find_class(name) != nullptr; }

  bool feature_resolves(const FeatureRef& f) const {
    const ClassDef* c = domain_.find_class(f.class_name);
    return c && c->declares(f.feature_name);
  }

  bool feature_type_matches(const FeatureRef& f) const {
    auto t = domain_.declared_feature_type(f.class_name, f.feature_name);
    return t && *t == f.recorded_type_name;
  }

  bool tool_exists(const std::string& title) const {
    return !title.empty() && set_.tooling.find_tool(title) != nullptr;
  }

  std::vector<const ClassDef*> concrete_classes() const {
    std::vector<const ClassDef*> out;
    for (const auto& c : domain_.classes)
      if (!c.is_abstract && !domain_.is_canvas(c.name)) out.push_back(&c);
    return out;
  }

  bool effective(const NodeMapping& nm) const { return class_resolves(nm.domain_meta_element); }
  bool effective(const LinkMapping& lm) const { return class_resolves(lm.domain_meta_element); }
  bool effective(const NodeMapping& nm, const FeatureLabelMapping& lm) const {
    return effective(nm) && std::all_of(lm.features.begin(), lm.features.end(), [&](const FeatureRef& f) {
             return feature_resolves(f) && feature_type_matches(f);
           });
  }

  // -- EmfGen ----------------------------------------------------------------

  void check_emfgen() {
    const auto& gen = set_.emfgen;
    for (const auto& c : domain_.classes) {
      const GenClass* g = gen.find(c.name);
      if (!g) {
        broken(ModelKind::EmfGen, "missing-genclass", c.name, "class " + c.name + " is not generated");
        continue;
      }
      auto listed = [&](const std::string& f) {
        return std::find(g->gen_features.begin(), g->gen_features.end(), f) != g->gen_features.end();
      };
      for (const auto& a : c.attributes)
        if (!listed(a.name))
          broken(ModelKind::EmfGen, "missing-genfeature", c.name + "." + a.name, "feature is not generated");
      for (const auto& r : c.references)
        if (!listed(r.name))
          broken(ModelKind::EmfGen, "missing-genfeature", c.name + "." + r.name, "feature is not generated");
    }
    for (const auto& g : gen.gen_classes) {
      const ClassDef* c = domain_.find_class(g.class_name);
      if (!c) {
        broken(ModelKind::EmfGen, "stale-genclass", g.class_name,
               "generator entry for unknown class " + g.class_name);
        continue;
      }
      for (const auto& f : g.gen_features)
        if (!c->declares(f))
          broken(ModelKind::EmfGen, "stale-genfeature", g.class_name + "." + f,
                 "generator entry for unknown feature");
    }
  }

  // -- Graph -----------------------------------------------------------------

  void check_graph() {
    const auto& g = set_.graph;
    std::set<std::string> used_nodes, used_connections, used_labels;
    for (const NodeMapping* nm : nodes_) {
      if (!effective(*nm)) continue;
      used_nodes.insert(nm->diagram_node);
      for (const auto& lm : nm->label_mappings)
        if (effective(*nm, lm)) used_labels.insert(lm.diagram_label);
    }
    for (const auto& lm : set_.mapping.link_mappings)
      if (effective(lm)) used_connections.insert(lm.diagram_link);

    for (const ClassDef* c : concrete_classes()) {
      const bool shown =
          std::any_of(nodes_.begin(), nodes_.end(),
                      [&](const NodeMapping* nm) {
                        return nm->domain_meta_element == c->name && g.has_node(nm->diagram_node);
                      }) ||
          std::any_of(set_.mapping.link_mappings.begin(), set_.mapping.link_mappings.end(),
                      [&](const LinkMapping& lm) {
                        return lm.domain_meta_element == c->name && g.has_connection(lm.diagram_link);
                      });
      if (!shown)
        gap(ModelKind::Graph, "class-without-node", c->name, "no diagram element shows " + c->name);

      for (const auto& owned : domain_.all_attributes(c->name)) {
        const std::string& attr = owned.attribute->name;
        if (g.has_label(label_name(owned.owner, attr))) continue;
        if (auto old = old_label_name(owned.owner, attr); old && g.has_label(*old)) continue;
        gap(ModelKind::Graph, "attribute-without-label", owned.owner + "." + attr,
            "no diagram label " + label_name(owned.owner, attr));
      }
    }

    std::set<std::string> used_figures;
    auto unused = [&](const std::vector<CanvasElement>& elems, const std::set<std::string>& used,
                      const std::string& category) {
      for (const auto& e : elems) {
        used_figures.insert(e.figure);
        if (!used.count(e.name))
          gap(ModelKind::Graph, "unused-element", category + ":" + e.name,
              category + " " + e.name + " is not used by any mapping");
      }
    };
    unused(g.nodes, used_nodes, "node");
    unused(g.connections, used_connections, "connection");
    unused(g.diagram_labels, used_labels, "label");
    for (const auto& f : g.figures)
      if (!used_figures.count(f.name))
        gap(ModelKind::Graph, "unused-element", "figure:" + f.name, "figure " + f.name + " is not used");
  }

  /// Label name derived from the attribute's name before the change, when
  /// the attribute or its class was only renamed.
  std::optional<std::string> old_label_name(const std::string& owner, const std::string& attr) const {
    if (!trace_) return std::nullopt;
    if (auto old = trace_->feature_in_old(owner, attr)) {
      const FeatureFate* fate = trace_->feature_fate(old->first, old->second);
      if (fate->moved) return std::nullopt;
      return label_name(old->first, old->second);
    }
    const std::string old_owner = trace_->class_in_old(owner);
    if (old_owner == owner) return std::nullopt;
    return label_name(old_owner, attr);
  }

  // -- Tooling ---------------------------------------------------------------

  void check_tooling() {
    std::set<std::string> referenced;
    std::set<std::string> with_tool;

    auto bound_class = [&](const std::string& tool, const std::string& cls) {
      if (class_resolves(cls)) return;
      if (trace_ && trace_->class_renamed(cls))
        gap(ModelKind::Tooling, "stale-tool-binding", tool + "->" + cls,
            "tool " + tool + " is bound to renamed class " + cls);
      else
        broken(ModelKind::Tooling, "dangling-tool-binding", tool + "->" + cls,
               "tool " + tool + " is bound to missing class " + cls);
    };
    auto bound_feature = [&](const std::string& tool, const FeatureRef& f) {
      const std::string subject = tool + "->" + f.qualified();
      if (!feature_resolves(f)) {
        if (trace_ && trace_->only_renamed(f.class_name, f.feature_name))
          gap(ModelKind::Tooling, "stale-tool-binding", subject,
              "tool " + tool + " is bound to renamed feature " + f.qualified());
        else
          broken(ModelKind::Tooling, "dangling-tool-binding", subject,
                 "tool " + tool + " is bound to missing feature " + f.qualified());
        return;
      }
      const std::string recorded = trace_ ? trace_->class_in_new(f.recorded_type_name) : f.recorded_type_name;
      auto declared = domain_.declared_feature_type(f.class_name, f.feature_name);
      if (!declared || *declared != recorded)
        broken(ModelKind::Tooling, "stale-tool-type", subject,
               "tool " + tool + " edits " + f.qualified() + " as " + f.recorded_type_name);
    };
    auto stale_title = [&](const std::string& tool, const std::string& cls) {
      if (!trace_ || !class_resolves(cls)) return;
      const std::string old = trace_->class_in_old(cls);
      if (old != cls && contains_word(tool, old))
        gap(ModelKind::Tooling, "stale-tool-title", tool, "title still names " + old + " instead of " + cls);
    };

    for (const NodeMapping* nm : nodes_) {
      if (!nm->tool.empty()) referenced.insert(nm->tool);
      if (!tool_exists(nm->tool)) continue;
      with_tool.insert(nm->domain_meta_element);
      bound_class(nm->tool, nm->domain_meta_element);
      for (const auto& lm : nm->label_mappings)
        for (const auto& f : lm.features) bound_feature(nm->tool, f);
      stale_title(nm->tool, nm->domain_meta_element);

      if (!class_resolves(nm->domain_meta_element)) continue;
      for (const auto& owned : domain_.all_attributes(nm->domain_meta_element)) {
        const FeatureRef want{owned.owner, owned.attribute->name, ""};
        const bool editable =
            std::any_of(nm->label_mappings.begin(), nm->label_mappings.end(), [&](const FeatureLabelMapping& lm) {
              return lm.features.size() == 1 && lm.features[0].class_name == want.class_name &&
                     lm.features[0].feature_name == want.feature_name && feature_resolves(lm.features[0]);
            });
        if (!editable)
          gap(ModelKind::Tooling, "attribute-not-editable", nm->domain_meta_element + "." + want.feature_name,
              "nodes created by " + nm->tool + " cannot edit " + want.qualified());
      }
    }
    for (const auto& lm : set_.mapping.link_mappings) {
      if (!lm.tool.empty()) referenced.insert(lm.tool);
      if (!tool_exists(lm.tool)) continue;
      with_tool.insert(lm.domain_meta_element);
      bound_class(lm.tool, lm.domain_meta_element);
      bound_feature(lm.tool, lm.source_feature);
      bound_feature(lm.tool, lm.target_feature);
      stale_title(lm.tool, lm.domain_meta_element);
    }

    for (const ClassDef* c : concrete_classes())
      if (!with_tool.count(c->name))
        gap(ModelKind::Tooling, "class-without-tool", c->name, "no creation tool for " + c->name);
    for (const auto& title : set_.tooling.titles())
      if (!referenced.count(title))
        gap(ModelKind::Tooling, "unbound-tool", title, "tool " + title + " is not bound to any mapping");
  }

  // -- Mapping ---------------------------------------------------------------

  void check_mapping() {
    const auto& g = set_.graph;
    auto feature = [&](const std::string& where, const FeatureRef& f) {
      if (!feature_resolves(f))
        broken(ModelKind::Mapping, "dangling-feature", where + ":" + f.qualified(),
               "feature " + f.qualified() + " does not exist");
      else if (!feature_type_matches(f))
        broken(ModelKind::Mapping, "stale-type", where + ":" + f.qualified(),
               "recorded type " + f.recorded_type_name + " of " + f.qualified() + " is out of date");
    };
    auto cls = [&](const std::string& name) {
      if (!class_resolves(name))
        broken(ModelKind::Mapping, "dangling-class", name, "class " + name + " does not exist");
    };
    auto tool = [&](const std::string& title) {
      if (!title.empty() && !tool_exists(title))
        broken(ModelKind::Mapping, "dangling-tool", title, "tool " + title + " does not exist");
    };
    auto graph = [&](bool ok, const std::string& category, const std::string& name) {
      if (!ok)
        broken(ModelKind::Mapping, "dangling-graph-element", category + ":" + name,
               category + " " + name + " does not exist");
    };

    std::set<std::string> mapped;
    for (const auto& top : set_.mapping.top_node_references) {
      const NodeMapping& nm = top.owned_child;
      mapped.insert(nm.domain_meta_element);
      feature("containment", top.containment_feature);
      cls(nm.domain_meta_element);
      tool(nm.tool);
      graph(g.has_node(nm.diagram_node), "node", nm.diagram_node);
      for (const auto& lm : nm.label_mappings) {
        for (const auto& f : lm.features) feature("label", f);
        graph(g.has_label(lm.diagram_label), "label", lm.diagram_label);
      }
      if (!class_resolves(nm.domain_meta_element)) continue;
      for (const auto& owned : domain_.all_attributes(nm.domain_meta_element)) {
        const bool labelled =
            std::any_of(nm.label_mappings.begin(), nm.label_mappings.end(), [&](const FeatureLabelMapping& lm) {
              return std::any_of(lm.features.begin(), lm.features.end(), [&](const FeatureRef& f) {
                return f.class_name == owned.owner && f.feature_name == owned.attribute->name;
              });
            });
        if (!labelled)
          gap(ModelKind::Mapping, "attribute-without-label-mapping",
              nm.domain_meta_element + "." + owned.attribute->name,
              "attribute " + owned.attribute->name + " is not shown on " + nm.domain_meta_element + " nodes");
      }
    }
    for (const auto& lm : set_.mapping.link_mappings) {
      mapped.insert(lm.domain_meta_element);
      cls(lm.domain_meta_element);
      tool(lm.tool);
      graph(g.has_connection(lm.diagram_link), "connection", lm.diagram_link);
      feature("source", lm.source_feature);
      feature("target", lm.target_feature);
    }
    for (const ClassDef* c : concrete_classes())
      if (!mapped.count(c->name))
        gap(ModelKind::Mapping, "class-without-mapping", c->name, "class " + c->name + " is not mapped");
  }

  const EditorModelSet& set_;
  const Metamodel& domain_;
  const Trace* trace_;
  std::vector<const NodeMapping*> nodes_;
  std::vector<Finding> findings_;
};

}  // namespace

BlameReport validate(const EditorModelSet& set, const Trace* trace) {
  return Validator(set, trace).run();
}

std::string render_table(const BlameReport& report) {
  std::ostringstream out;
  out << "EmfGen  Graph  Tooling  Mapping  Level\n";
  out << "  " << symbol(report.per_model[0]) << "       " << symbol(report.per_model[1]) << "       "
      << symbol(report.per_model[2]) << "       " << symbol(report.per_model[3]) << "      "
      << report.level << "\n";
  if (!report.findings.empty()) out << "\n";
  for (const auto& f : report.findings) {
    out << (f.severity == Severity::Broken ? symbol(Verdict::Broken) : symbol(Verdict::Gap)) << " "
        << to_string(f.model) << " " << f.code << " " << f.subject << ": " << f.message << "\n";
  }
  return out.str();
}

}  // namespace coevo
