#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coevo/diff.hpp"

// "<EntryKind> <subject>" per entry: class name or Owner.feature, new-side
// names for additions and old-side names otherwise.
inline std::string entry_label(const coevo::DiffEntry& e) {
  using namespace coevo;
  const std::string kind(to_string(kind_of(e)));
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AddedClass> || std::is_same_v<T, DeletedClass> ||
                      std::is_same_v<T, ChangedClass>)
          return kind + " " + x.element.name;
        else
          return kind + " " + x.owner + "." + x.element.name;
      },
      e);
}

inline std::vector<std::string> entry_labels(const coevo::DiffModel& d) {
  std::vector<std::string> v;
  for (const auto& e : d.entries) v.push_back(entry_label(e));
  std::sort(v.begin(), v.end());
  return v;
}
