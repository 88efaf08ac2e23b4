#include "coevo/adapt.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "coevo/errors.hpp"

namespace coevo {

std::string_view to_string(Strategy s) {
  return s == Strategy::Minimalistic ? "minimalistic" : "best-effort";
}

std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "minimalistic") return Strategy::Minimalistic;
  if (s == "best-effort") return Strategy::BestEffort;
  return std::nullopt;
}

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Positions of whole-word occurrences of `word` in `text`.
std::vector<std::size_t> word_positions(std::string_view text, std::string_view word) {
  std::vector<std::size_t> out;
  if (word.empty()) return out;
  for (std::size_t pos = text.find(word); pos != std::string_view::npos;
       pos = text.find(word, pos + 1)) {
    const bool left = pos == 0 || !word_char(text[pos - 1]);
    const std::size_t end = pos + word.size();
    const bool right = end == text.size() || !word_char(text[end]);
    if (left && right) out.push_back(pos);
  }
  return out;
}

}  // namespace

bool contains_word(std::string_view text, std::string_view word) {
  return !word_positions(text, word).empty();
}

std::string replace_word(std::string_view text, std::string_view word, std::string_view with) {
  std::string out;
  std::size_t from = 0;
  for (std::size_t pos : word_positions(text, word)) {
    out.append(text.substr(from, pos - from));
    out.append(with);
    from = pos + word.size();
  }
  out.append(text.substr(from));
  return out;
}

namespace {

void fire(AdaptationLog* log, std::string rule, std::string change, Bindings b) {
  if (log) log->fired_rules.push_back({std::move(rule), std::move(change), std::move(b)});
}

void diagnose(AdaptationLog* log, std::string message) {
  if (log) log->diagnostics.push_back(std::move(message));
}

std::string change_label(const Classification* cls, std::size_t entry) {
  if (!cls) return "Unclassified";
  const CatalogChange* c = cls->change_for(entry);
  return c ? std::string(to_string(c->kind)) : "Unclassified";
}

bool is_true(const Bindings& b, const std::string& key) {
  auto it = b.find(key);
  return it != b.end() && it->second == "true";
}

const std::string& binding(const Bindings& b, const std::string& key) {
  static const std::string empty;
  auto it = b.find(key);
  return it == b.end() ? empty : it->second;
}

// Mapping-level view of which old-side names each tool is bound to.
struct ToolBindings {
  std::set<std::string> classes;
  std::set<std::pair<std::string, std::string>> features;      // any bound feature
  std::set<std::pair<std::string, std::string>> link_features;  // link source/target only
};

std::map<std::string, ToolBindings> tool_bindings(const MappingModel& mapping) {
  std::map<std::string, ToolBindings> out;
  for (const auto& top : mapping.top_node_references) {
    const auto& nm = top.owned_child;
    if (nm.tool.empty()) continue;
    auto& b = out[nm.tool];
    b.classes.insert(nm.domain_meta_element);
    for (const auto& lm : nm.label_mappings)
      for (const auto& f : lm.features) b.features.insert({f.class_name, f.feature_name});
  }
  for (const auto& lm : mapping.link_mappings) {
    if (lm.tool.empty()) continue;
    auto& b = out[lm.tool];
    b.classes.insert(lm.domain_meta_element);
    for (const FeatureRef* f : {&lm.source_feature, &lm.target_feature}) {
      b.features.insert({f->class_name, f->feature_name});
      b.link_features.insert({f->class_name, f->feature_name});
    }
  }
  return out;
}

const NodeMapping* node_mapping_for(const MappingModel& mapping, std::string_view cls) {
  for (const auto& top : mapping.top_node_references)
    if (top.owned_child.domain_meta_element == cls) return &top.owned_child;
  return nullptr;
}

/// New-side name of the existing class whose handling an added
/// specialization copies, or nullopt when none qualifies.
std::optional<std::string> choose_sibling(const AdaptationContext& ctx, const CatalogChange& change,
                                          const MappingModel& old_mapping) {
  const Trace& trace = ctx.evolution.trace();
  const Metamodel& new_mm = ctx.evolution.new_metamodel();
  const std::string& added = binding(change.bindings, "class");
  auto mapped = [&](const std::string& new_name) {
    return !trace.class_added(new_name) &&
           node_mapping_for(old_mapping, trace.class_in_old(new_name)) != nullptr;
  };

  if (const std::string& bound = binding(change.bindings, "s3.updated"); !bound.empty() && mapped(bound))
    return bound;

  const std::string& super = binding(change.bindings, "superType");
  std::optional<std::string> best;
  for (const auto& c : new_mm.classes) {
    if (c.is_abstract || c.name == added || !new_mm.is_ancestor(super, c.name) || !mapped(c.name))
      continue;
    if (!best || c.name < *best) best = c.name;
  }
  return best;
}

/// Title for the tool of an added class modelled on a sibling's tool.
std::string replicated_title(std::string_view sibling_title, std::string_view sibling_new,
                             std::string_view sibling_old, std::string_view added) {
  if (contains_word(sibling_title, sibling_new)) return replace_word(sibling_title, sibling_new, added);
  if (contains_word(sibling_title, sibling_old)) return replace_word(sibling_title, sibling_old, added);
  return std::string(added);
}

std::string creation_description(std::string_view cls) { return "Create new " + std::string(cls); }

}  // namespace

// ---------------------------------------------------------------------------
// EMF generator model
// ---------------------------------------------------------------------------

EmfGenModel adapt_emfgen(const DiffModel& diff, const EmfGenModel& emfgen, AdaptationLog* log,
                         const Classification* classification) {
  const Trace trace(diff);

  // Fate of each old (class, feature) pair; nullopt removes it.
  std::map<std::pair<std::string, std::string>, std::optional<std::string>> in_place;
  std::vector<std::pair<std::string, std::string>> moved_in, added_features;
  std::vector<std::string> added_classes;

  for (std::size_t i = 0; i < diff.entries.size(); ++i) {
    const auto& e = diff.entries[i];
    const std::string change = change_label(classification, i);
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, AddedClass>) {
            added_classes.push_back(x.element.name);
            fire(log, "AddedClassToGenClass", change, {{"class", x.element.name}});
          } else if constexpr (std::is_same_v<T, DeletedClass>) {
            fire(log, "DeletedClassToGenClass", change, {{"class", x.element.name}});
          } else if constexpr (std::is_same_v<T, ChangedClass>) {
            if (x.element.name != x.updated.name)
              fire(log, "ChangedClassToGenClass", change,
                   {{"class", x.element.name}, {"newName", x.updated.name}});
          } else if constexpr (std::is_same_v<T, AddedAttribute> || std::is_same_v<T, AddedReference>) {
            added_features.emplace_back(x.owner, x.element.name);
            fire(log, "AddedFeatureToGenFeature", change, {{"owner", x.owner}, {"feature", x.element.name}});
          } else if constexpr (std::is_same_v<T, DeletedAttribute> || std::is_same_v<T, DeletedReference>) {
            in_place[{x.owner, x.element.name}] = std::nullopt;
            fire(log, "DeletedFeatureToGenFeature", change, {{"owner", x.owner}, {"feature", x.element.name}});
          } else {
            const bool stays = !trace.class_deleted(x.owner) && trace.class_in_new(x.owner) == x.new_owner;
            if (stays) {
              in_place[{x.owner, x.element.name}] = x.updated.name;
            } else {
              in_place[{x.owner, x.element.name}] = std::nullopt;
              moved_in.emplace_back(x.new_owner, x.updated.name);
            }
            if (!stays || x.element.name != x.updated.name)
              fire(log, "ChangedFeatureToGenFeature", change,
                   {{"owner", x.owner},
                    {"feature", x.element.name},
                    {"newOwner", x.new_owner},
                    {"newName", x.updated.name}});
          }
        },
        e);
  }

  EmfGenModel out;
  out.package_prefix = emfgen.package_prefix;
  for (const auto& gc : emfgen.gen_classes) {
    if (trace.class_deleted(gc.class_name)) continue;
    GenClass next{trace.class_in_new(gc.class_name), {}};
    for (const auto& f : gc.gen_features) {
      auto it = in_place.find({gc.class_name, f});
      if (it == in_place.end())
        next.gen_features.push_back(f);
      else if (it->second)
        next.gen_features.push_back(*it->second);
    }
    out.gen_classes.push_back(std::move(next));
  }
  for (const auto& c : added_classes)
    if (!out.find(c)) out.gen_classes.push_back({c, {}});

  auto append = [&](const std::string& owner, const std::string& feature) {
    auto it = std::find_if(out.gen_classes.begin(), out.gen_classes.end(),
                           [&](const GenClass& g) { return g.class_name == owner; });
    if (it == out.gen_classes.end()) {
      out.gen_classes.push_back({owner, {}});
      it = std::prev(out.gen_classes.end());
    }
    if (std::find(it->gen_features.begin(), it->gen_features.end(), feature) == it->gen_features.end())
      it->gen_features.push_back(feature);
  };
  for (const auto& [owner, f] : moved_in) append(owner, f);
  for (const auto& [owner, f] : added_features) append(owner, f);
  return out;
}

// ---------------------------------------------------------------------------
// Tooling model
// ---------------------------------------------------------------------------

ToolingModel adapt_tooling(const AdaptationContext& ctx, const MappingModel& mapping,
                           const ToolingModel& tooling, Strategy strategy, AdaptationLog* log) {
  const Trace& trace = ctx.evolution.trace();
  const auto bound = tool_bindings(mapping);
  ToolingModel out = tooling;

  // Tools are addressed by their input title throughout; `current` tracks
  // the title each one carries now.
  std::map<std::string, std::string> current;
  for (const auto& t : tooling.titles()) current[t] = t;
  auto tool_by_original = [&](const std::string& original) -> CreationTool* {
    auto it = current.find(original);
    if (it == current.end()) return nullptr;
    for (auto& g : out.palette)
      for (auto& t : g.tools)
        if (t.title == it->second) return &t;
    return nullptr;
  };

  std::set<std::string> removed;
  for (const auto& change : ctx.classification.changes) {
    const std::string kind(to_string(change.kind));
    switch (change.kind) {
      case ChangeKind::DeleteConcreteClass: {
        const std::string& cls = binding(change.bindings, "class");
        for (const auto& [title, b] : bound)
          if (b.classes.count(cls) && tooling.find_tool(title) && removed.insert(title).second)
            fire(log, "DeletedClassToCreationTool", kind, {{"class", cls}, {"tool", title}});
        break;
      }
      case ChangeKind::DeleteProperty:
      case ChangeKind::MoveProperty:
      case ChangeKind::ChangePropertyType: {
        const std::pair key{binding(change.bindings, "owner"), binding(change.bindings, "feature")};
        for (const auto& [title, b] : bound)
          if (b.link_features.count(key) && tooling.find_tool(title) && removed.insert(title).second)
            fire(log, "ChangedLinkFeatureToCreationTool", kind,
                 {{"owner", key.first}, {"feature", key.second}, {"tool", title}});
        break;
      }
      default: break;
    }
  }
  for (auto& g : out.palette)
    std::erase_if(g.tools, [&](const CreationTool& t) { return removed.count(t.title) > 0; });
  for (const auto& t : removed) current.erase(t);

  if (strategy == Strategy::Minimalistic) return out;

  auto rewrite = [&](const std::string& original, std::string_view from, std::string_view to,
                     const std::string& rule, const std::string& kind, Bindings b) {
    CreationTool* tool = tool_by_original(original);
    if (!tool) return;
    std::string title = replace_word(tool->title, from, to);
    std::string description = replace_word(tool->description, from, to);
    if (title == tool->title && description == tool->description) return;
    if (title != tool->title && out.find_tool(title)) {
      diagnose(log, rule + ": title '" + title + "' already taken; kept '" + tool->title + "'");
      title = tool->title;
    }
    tool->title = title;
    tool->description = std::move(description);
    current[original] = tool->title;
    b["tool"] = original;
    fire(log, rule, kind, std::move(b));
  };

  for (const auto& change : ctx.classification.changes) {
    const std::string kind(to_string(change.kind));
    if (change.kind == ChangeKind::RenameClass) {
      const std::string& from = binding(change.bindings, "class");
      const std::string& to = binding(change.bindings, "newName");
      for (const auto& [title, b] : bound)
        if (b.classes.count(from)) rewrite(title, from, to, "RenamedClassToCreationTool", kind, change.bindings);
    } else if (change.kind == ChangeKind::RenameProperty) {
      const std::pair key{binding(change.bindings, "owner"), binding(change.bindings, "feature")};
      for (const auto& [title, b] : bound)
        if (b.features.count(key))
          rewrite(title, key.second, binding(change.bindings, "newName"), "RenamedPropertyToCreationTool",
                  kind, change.bindings);
    }
  }

  // New tools go right after their sibling's tool, in change order.
  std::map<std::string, std::vector<CreationTool>> after;
  for (const auto& change : ctx.classification.changes) {
    if (change.kind != ChangeKind::AddSpecialization || !is_true(change.bindings, "added")) continue;
    const std::string& added = binding(change.bindings, "class");
    const auto sibling = choose_sibling(ctx, change, mapping);
    if (!sibling) {
      diagnose(log, "AddedSpecializationClassToCreationTool: no mapped sibling for '" + added + "'");
      continue;
    }
    const std::string sibling_old = trace.class_in_old(*sibling);
    const NodeMapping* nm = node_mapping_for(mapping, sibling_old);
    const CreationTool* sibling_tool = nm ? tool_by_original(nm->tool) : nullptr;
    if (!sibling_tool) {
      diagnose(log, "AddedSpecializationClassToCreationTool: sibling '" + *sibling + "' has no tool");
      continue;
    }
    CreationTool tool{replicated_title(sibling_tool->title, *sibling, sibling_old, added),
                      creation_description(added)};
    bool taken = out.find_tool(tool.title) != nullptr;
    for (const auto& [_, pending] : after)
      for (const auto& p : pending) taken = taken || p.title == tool.title;
    if (taken) {
      diagnose(log, "AddedSpecializationClassToCreationTool: title '" + tool.title + "' already taken");
      continue;
    }
    Bindings b = change.bindings;
    b["sibling"] = *sibling;
    b["tool"] = tool.title;
    after[sibling_tool->title].push_back(std::move(tool));
    fire(log, "AddedSpecializationClassToCreationTool", std::string(to_string(change.kind)), std::move(b));
  }
  if (!after.empty()) {
    for (auto& g : out.palette) {
      std::vector<CreationTool> tools;
      for (auto& t : g.tools) {
        tools.push_back(t);
        if (auto it = after.find(t.title); it != after.end())
          tools.insert(tools.end(), it->second.begin(), it->second.end());
      }
      g.tools = std::move(tools);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mapping model
// ---------------------------------------------------------------------------

namespace {

class MappingAdapter {
 public:
  MappingAdapter(const AdaptationContext& ctx, const ToolingModel& tooling_after, AdaptationLog* log)
      : ctx_(ctx), trace_(ctx.evolution.trace()), old_(ctx.evolution.old_metamodel()),
        new_(ctx.evolution.new_metamodel()), tooling_(tooling_after), log_(log) {
    for (const auto& c : ctx.classification.changes) {
      const std::string& owner = binding(c.bindings, "owner");
      if (!owner.empty()) property_change_[{owner, binding(c.bindings, "feature")}] = c.kind;
      if (c.kind == ChangeKind::RenameClass || c.kind == ChangeKind::DeleteConcreteClass)
        class_change_[binding(c.bindings, "class")] = c.kind;
    }
  }

  MappingModel rewrite(const MappingModel& in) {
    MappingModel out;
    for (const auto& top : in.top_node_references)
      if (auto t = rewrite_top(top)) out.top_node_references.push_back(std::move(*t));
    for (const auto& lm : in.link_mappings)
      if (auto l = rewrite_link(lm)) out.link_mappings.push_back(std::move(*l));
    return out;
  }

  void add_properties(MappingModel& m) {
    for (const auto& change : ctx_.classification.changes) {
      if (change.kind != ChangeKind::AddProperty) continue;
      const std::string& owner = binding(change.bindings, "owner");
      const std::string& feature = binding(change.bindings, "feature");
      const ClassDef* cls = new_.find_class(owner);
      const AttributeDef* attr = cls ? cls->find_attribute(feature) : nullptr;
      if (!attr) continue;
      for (auto& top : m.top_node_references) {
        auto& nm = top.owned_child;
        const auto& dme = nm.domain_meta_element;
        if (nm.label_mappings.empty() || (dme != owner && !new_.is_ancestor(owner, dme))) continue;
        nm.label_mappings.front().features.push_back({owner, feature, std::string(to_string(attr->type))});
        Bindings b = change.bindings;
        b["nodeMapping"] = dme;
        fire(log_, "AddedPropertyToFeatureLabelMapping", std::string(to_string(change.kind)), std::move(b));
      }
    }
  }

  void replicate_specializations(const MappingModel& old_mapping, MappingModel& m) {
    std::map<std::string, std::vector<TopNodeReference>> after;
    for (const auto& change : ctx_.classification.changes) {
      if (change.kind != ChangeKind::AddSpecialization || !is_true(change.bindings, "added")) continue;
      const std::string& added = binding(change.bindings, "class");
      const auto sibling = choose_sibling(ctx_, change, old_mapping);
      const TopNodeReference* source = nullptr;
      if (sibling)
        for (const auto& top : m.top_node_references)
          if (top.owned_child.domain_meta_element == *sibling) {
            source = &top;
            break;
          }
      if (!source) {
        diagnose(log_, "AddedSpecializationClassToNodeMapping: no mapped sibling for '" + added + "'");
        continue;
      }

      TopNodeReference copy;
      copy.containment_feature = source->containment_feature;
      NodeMapping& nm = copy.owned_child;
      nm.domain_meta_element = added;
      nm.diagram_node = source->owned_child.diagram_node;
      nm.related_diagrams = source->owned_child.related_diagrams;
      for (const auto& g : tooling_.palette)
        for (const auto& t : g.tools)
          if (nm.tool.empty() && t.description == creation_description(added)) nm.tool = t.title;
      for (const auto& lm : source->owned_child.label_mappings) {
        const bool inherited = std::all_of(lm.features.begin(), lm.features.end(), [&](const FeatureRef& f) {
          return f.class_name == added || new_.is_ancestor(f.class_name, added);
        });
        if (inherited) nm.label_mappings.push_back(lm);
      }
      if (!nm.related_diagrams.empty())
        diagnose(log_, "AddedSpecializationClassToNodeMapping: relatedDiagrams of '" + added +
                           "' copied from '" + *sibling + "'; review");

      Bindings b = change.bindings;
      b["sibling"] = *sibling;
      b["diagramNode"] = nm.diagram_node;
      b["tool"] = nm.tool;
      after[*sibling].push_back(std::move(copy));
      fire(log_, "AddedSpecializationClassToNodeMapping", std::string(to_string(change.kind)), std::move(b));
    }
    if (after.empty()) return;
    std::vector<TopNodeReference> tops;
    std::set<std::string> placed;
    for (auto& top : m.top_node_references) {
      tops.push_back(top);
      const auto& dme = top.owned_child.domain_meta_element;
      if (auto it = after.find(dme); it != after.end() && placed.insert(dme).second)
        tops.insert(tops.end(), it->second.begin(), it->second.end());
    }
    m.top_node_references = std::move(tops);
  }

 private:
  std::string kind_of_class_change(const std::string& cls) const {
    auto it = class_change_.find(cls);
    return it == class_change_.end() ? "Unclassified" : std::string(to_string(it->second));
  }
  std::string kind_of_property_change(const FeatureRef& f) const {
    auto it = property_change_.find({f.class_name, f.feature_name});
    return it == property_change_.end() ? kind_of_class_change(f.class_name)
                                        : std::string(to_string(it->second));
  }

  /// New-side class name; nullopt when deleted. Names unknown to the old
  /// metamodel were already dangling and are left alone.
  std::optional<std::string> rewrite_class(const std::string& cls, const std::string& where) {
    if (!old_.find_class(cls)) return cls;
    if (trace_.class_deleted(cls)) {
      fire(log_, "DeletedClassToMapping", kind_of_class_change(cls), {{"class", cls}, {"element", where}});
      return std::nullopt;
    }
    std::string next = trace_.class_in_new(cls);
    if (next != cls)
      fire(log_, "RenamedClassToMapping", kind_of_class_change(cls),
           {{"class", cls}, {"newName", next}, {"element", where}});
    return next;
  }

  std::optional<FeatureRef> rewrite_feature(const FeatureRef& f) {
    const ClassDef* owner = old_.find_class(f.class_name);
    if (!owner || !owner->declares(f.feature_name)) return f;
    const std::string kind = kind_of_property_change(f);
    Bindings b{{"owner", f.class_name}, {"feature", f.feature_name}};

    FeatureRef out = f;
    out.recorded_type_name = trace_.class_in_new(f.recorded_type_name);
    if (const FeatureFate* fate = trace_.feature_fate(f.class_name, f.feature_name)) {
      const bool pulled_up = kind == to_string(ChangeKind::PullUpProperty);
      if (fate->deleted || fate->retyped || (fate->moved && !pulled_up)) {
        fire(log_, "DroppedFeatureReference", kind, std::move(b));
        return std::nullopt;
      }
      out.class_name = fate->new_owner;
      out.feature_name = fate->new_name;
      if (fate->moved || fate->renamed) {
        b["newOwner"] = out.class_name;
        b["newName"] = out.feature_name;
        fire(log_, pulled_up ? "PulledUpPropertyToMapping" : "RenamedPropertyToMapping", kind, std::move(b));
      }
      return out;
    }
    if (trace_.class_deleted(f.class_name)) {
      fire(log_, "DroppedFeatureReference", kind, std::move(b));
      return std::nullopt;
    }
    out.class_name = trace_.class_in_new(f.class_name);
    return out;
  }

  std::string rewrite_tool(const std::string& tool) {
    if (tool.empty() || tooling_.find_tool(tool)) return tool;
    std::string title = tool;
    for (const auto& [from, to] : trace_.class_renames()) title = replace_word(title, from, to);
    return tooling_.find_tool(title) ? title : std::string();
  }

  std::optional<TopNodeReference> rewrite_top(const TopNodeReference& top) {
    const auto& nm = top.owned_child;
    auto cls = rewrite_class(nm.domain_meta_element, "nodeMapping");
    auto containment = rewrite_feature(top.containment_feature);
    if (!cls || !containment) return std::nullopt;

    TopNodeReference out;
    out.containment_feature = std::move(*containment);
    out.owned_child.domain_meta_element = std::move(*cls);
    out.owned_child.tool = rewrite_tool(nm.tool);
    out.owned_child.diagram_node = nm.diagram_node;
    out.owned_child.related_diagrams = nm.related_diagrams;
    for (const auto& lm : nm.label_mappings) {
      FeatureLabelMapping next{{}, lm.diagram_label};
      bool keep = true;
      for (const auto& f : lm.features) {
        auto r = rewrite_feature(f);
        if (!r) {
          keep = false;
          break;
        }
        next.features.push_back(std::move(*r));
      }
      if (keep) out.owned_child.label_mappings.push_back(std::move(next));
    }
    return out;
  }

  std::optional<LinkMapping> rewrite_link(const LinkMapping& lm) {
    auto cls = rewrite_class(lm.domain_meta_element, "linkMapping");
    auto source = rewrite_feature(lm.source_feature);
    auto target = rewrite_feature(lm.target_feature);
    if (!cls || !source || !target) return std::nullopt;
    return LinkMapping{std::move(*cls), rewrite_tool(lm.tool), lm.diagram_link, std::move(*source),
                       std::move(*target)};
  }

  const AdaptationContext& ctx_;
  const Trace& trace_;
  const Metamodel& old_;
  const Metamodel& new_;
  const ToolingModel& tooling_;
  AdaptationLog* log_;
  std::map<std::pair<std::string, std::string>, ChangeKind> property_change_;
  std::map<std::string, ChangeKind> class_change_;
};

}  // namespace

MappingModel adapt_mapping(const AdaptationContext& ctx, const MappingModel& mapping,
                           const ToolingModel& tooling_after, Strategy strategy, AdaptationLog* log) {
  MappingAdapter adapter(ctx, tooling_after, log);
  MappingModel out = adapter.rewrite(mapping);
  if (strategy == Strategy::BestEffort) {
    adapter.add_properties(out);
    adapter.replicate_specializations(mapping, out);
  }
  return out;
}

// ---------------------------------------------------------------------------

AdaptationPlan adapt_all(const DiffModel& diff, const EditorModelSet& set, Strategy strategy) {
  AdaptationPlan plan;
  plan.strategy = strategy;
  plan.outputs.domain = apply_diff(set.domain, diff);
  plan.outputs.graph = set.graph;

  const Evolution evolution(diff, set.domain, plan.outputs.domain);
  plan.classification = classify_changes(diff, set.domain, plan.outputs.domain);
  const AdaptationContext ctx{evolution, plan.classification};

  AdaptationLog log;
  plan.outputs.emfgen = adapt_emfgen(diff, set.emfgen, &log, &plan.classification);
  plan.outputs.tooling = adapt_tooling(ctx, set.mapping, set.tooling, strategy, &log);
  plan.outputs.mapping = adapt_mapping(ctx, set.mapping, plan.outputs.tooling, strategy, &log);
  plan.fired_rules = std::move(log.fired_rules);
  plan.diagnostics = std::move(log.diagnostics);
  return plan;
}

}  // namespace coevo
