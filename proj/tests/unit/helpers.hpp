#pragma once

#include <filesystem>
#include <string>

#include "coevo/scenario.hpp"
#include "coevo/workspace.hpp"

namespace fixtures {

inline std::filesystem::path root() { return COEVO_FIXTURES_DIR; }
inline std::filesystem::path golden() { return COEVO_GOLDEN_DIR; }

inline coevo::EditorModelSet base_set() { return coevo::load_model_set(root() / "catalog-base").set; }

inline coevo::Fixture load(const std::string& name) { return coevo::load_fixture(root() / name); }

// The compound mind-map evolution: the old model set and the evolved domain.
struct Compound {
  coevo::EditorModelSet set;
  coevo::Metamodel evolved;
  coevo::DiffModel diff;
};

inline Compound compound() {
  const coevo::Fixture f = load("mindmap");
  return {f.models, f.evolved, coevo::compute_diff(f.models.domain, f.evolved)};
}

}  // namespace fixtures
