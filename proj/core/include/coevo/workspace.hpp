// Reading and writing model sets as directories of per-kind files.
#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "coevo/format.hpp"
#include "coevo/model.hpp"

namespace coevo {

/// Throws IoError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
/// Creates parent directories as needed; throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

struct LoadedModelSet {
  EditorModelSet set;
  std::map<ModelKind, std::filesystem::path> files;  // the five model kinds
  std::map<ModelKind, std::string> raw;              // file contents as read
};

/// Loads the one file of each model kind found directly in `dir`, chosen
/// by extension (.mm.json, .graph.json, .tool.json, .map.json, .gen.json).
/// Throws IoError when `dir` is unreadable and ParseError when a kind is
/// missing or present twice, or a file does not parse. Parse messages are
/// prefixed with the file name.
LoadedModelSet load_model_set(const std::filesystem::path& dir);

/// Parses one file, prefixing parse errors with its path.
EditorModel load_model(const std::filesystem::path& path, ModelKind kind);

}  // namespace coevo
