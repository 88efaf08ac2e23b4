#include "coevo/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coevo/errors.hpp"

namespace coevo {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

namespace {

EditorModel parse_file(const fs::path& path, const std::string& text, ModelKind kind) {
  try {
    return parse_model(text, kind);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), path.string() + ": " + e.what(), e.line(), e.column());
  }
}

}  // namespace

EditorModel load_model(const fs::path& path, ModelKind kind) {
  return parse_file(path, read_file(path), kind);
}

LoadedModelSet load_model_set(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());

  LoadedModelSet out;
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file()) entries.push_back(e.path());
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(entries.begin(), entries.end());

  for (const auto& p : entries) {
    const auto kind = kind_from_path(p.filename().string());
    if (!kind || *kind == ModelKind::Diff || *kind == ModelKind::Blame || *kind == ModelKind::Plan ||
        *kind == ModelKind::DiffSchema)
      continue;
    if (out.files.count(*kind))
      throw ParseError(ParseError::Kind::Schema, dir.string() + ": more than one " +
                                                     std::string(to_string(*kind)) + " file (" +
                                                     out.files[*kind].filename().string() + ", " +
                                                     p.filename().string() + ")");
    out.files[*kind] = p;
  }

  for (ModelKind k : {ModelKind::Metamodel, ModelKind::Graph, ModelKind::Tooling, ModelKind::Mapping,
                      ModelKind::EmfGen}) {
    auto it = out.files.find(k);
    if (it == out.files.end())
      throw ParseError(ParseError::Kind::Schema, dir.string() + ": no " + std::string(to_string(k)) +
                                                     " file (*" + std::string(file_extension(k)) + ")");
    std::string text = read_file(it->second);
    EditorModel m = parse_file(it->second, text, k);
    out.raw[k] = std::move(text);
    std::visit(
        [&](auto&& model) {
          using T = std::decay_t<decltype(model)>;
          if constexpr (std::is_same_v<T, Metamodel>) out.set.domain = std::move(model);
          else if constexpr (std::is_same_v<T, GraphModel>) out.set.graph = std::move(model);
          else if constexpr (std::is_same_v<T, ToolingModel>) out.set.tooling = std::move(model);
          else if constexpr (std::is_same_v<T, MappingModel>) out.set.mapping = std::move(model);
          else out.set.emfgen = std::move(model);
        },
        std::move(m));
  }
  return out;
}

}  // namespace coevo
