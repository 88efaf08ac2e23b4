// Resolution of the name-based links between editor models.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coevo/format.hpp"
#include "coevo/model.hpp"

namespace coevo {

enum class LinkKind { DomainClass, DomainFeature, Tool, GraphNode, GraphConnection, GraphLabel };

std::string_view to_string(LinkKind k);

struct Link {
  ModelKind source;   // Mapping or EmfGen
  std::string path;   // location of the link inside the source model
  LinkKind kind;
  std::string target; // the name being looked up
  bool resolved = false;

  bool operator==(const Link&) const = default;
};

struct ResolutionTable {
  std::vector<Link> links;

  std::vector<Link> dangling() const;
  std::size_t dangling_count(std::optional<ModelKind> source = std::nullopt) const;
};

/// Lists every cross-model link of `set` in model order. Feature links
/// resolve only to features declared directly in the named class; empty
/// tool references are not links.
ResolutionTable resolve(const EditorModelSet& set);

}  // namespace coevo
