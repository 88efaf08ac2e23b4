// coevo: diff, adapt and validate editor definition models.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "coevo/adapt.hpp"
#include "coevo/classify.hpp"
#include "coevo/diff.hpp"
#include "coevo/errors.hpp"
#include "coevo/format.hpp"
#include "coevo/scenario.hpp"
#include "coevo/soundness.hpp"
#include "coevo/workspace.hpp"

#ifndef COEVO_DEFAULT_FIXTURES
#define COEVO_DEFAULT_FIXTURES "fixtures"
#endif

namespace fs = std::filesystem;
using namespace coevo;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 74;

int exit_for_level(int level) { return level == 3 ? 0 : level; }

Metamodel read_metamodel(const fs::path& p) {
  return std::get<Metamodel>(load_model(p, ModelKind::Metamodel));
}

DiffModel read_diff(const fs::path& p) {
  try {
    return parse_diff(read_file(p));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), p.string() + ": " + e.what(), e.line(), e.column());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

// -- diff ---------------------------------------------------------------------

int cmd_diff(const std::string& old_path, const std::string& new_path, const std::string& out) {
  const DiffModel d = compute_diff(read_metamodel(old_path), read_metamodel(new_path));
  if (out.empty()) {
    std::cout << serialize(d);
    return 0;
  }
  write_file(out, serialize(d));
  std::cout << d.entries.size() << (d.entries.size() == 1 ? " entry" : " entries") << "\n";
  for (const auto& e : d.entries) std::cout << "  " << describe(e) << "\n";
  return 0;
}

// -- classify -----------------------------------------------------------------

int cmd_classify(const std::string& old_path, const std::string& new_path) {
  const Metamodel old_mm = read_metamodel(old_path);
  const Metamodel new_mm = read_metamodel(new_path);
  const DiffModel d = compute_diff(old_mm, new_mm);
  const Classification c = classify_changes(d, old_mm, new_mm);
  for (const auto& change : c.changes) {
    std::cout << to_string(change.kind);
    for (const auto& [k, v] : change.bindings) std::cout << " " << k << "=" << v;
    std::cout << "\n";
  }
  for (std::size_t i : c.unclassified) std::cout << "Unclassified " << describe(d.entries[i]) << "\n";
  return 0;
}

// -- adapt --------------------------------------------------------------------

int cmd_adapt(const std::string& diff_path, const std::string& models, const std::string& strategy_name,
              const std::string& out_dir, const std::string& format) {
  const auto strategy = strategy_from_string(strategy_name);
  if (!strategy) {
    std::cerr << "error: unknown strategy '" << strategy_name << "' (minimalistic, best-effort)\n";
    return kExitUsage;
  }
  const LoadedModelSet in = load_model_set(models);
  const DiffModel diff = read_diff(diff_path);
  const AdaptationPlan plan = adapt_all(diff, in.set, *strategy);
  const fs::path out(out_dir);

  // A model the adapters left alone is copied byte for byte.
  auto write = [&](ModelKind kind, const EditorModel& adapted, bool unchanged) {
    const fs::path target = out / in.files.at(kind).filename();
    write_file(target, unchanged ? in.raw.at(kind) : serialize_model(adapted));
    return target.string();
  };
  std::vector<std::pair<ModelKind, std::string>> written;
  written.emplace_back(ModelKind::Metamodel,
                       write(ModelKind::Metamodel, plan.outputs.domain, plan.outputs.domain == in.set.domain));
  written.emplace_back(ModelKind::Graph, write(ModelKind::Graph, plan.outputs.graph, true));
  written.emplace_back(ModelKind::Tooling,
                       write(ModelKind::Tooling, plan.outputs.tooling, plan.outputs.tooling == in.set.tooling));
  written.emplace_back(ModelKind::Mapping,
                       write(ModelKind::Mapping, plan.outputs.mapping, plan.outputs.mapping == in.set.mapping));
  written.emplace_back(ModelKind::EmfGen,
                       write(ModelKind::EmfGen, plan.outputs.emfgen, plan.outputs.emfgen == in.set.emfgen));

  const std::string report = serialize(plan, written);
  write_file(out / "adaptation.plan.json", report);
  if (format == "json") {
    std::cout << report;
  } else {
    std::cout << "strategy " << to_string(plan.strategy) << ", " << plan.fired_rules.size() << " rules fired\n";
    for (const auto& r : plan.fired_rules) {
      std::cout << "  " << r.rule << " [" << r.change << "]";
      for (const auto& [k, v] : r.bindings) std::cout << " " << k << "=" << v;
      std::cout << "\n";
    }
    for (const auto& d : plan.diagnostics) std::cout << "  note: " << d << "\n";
  }
  return 0;
}

// -- validate -----------------------------------------------------------------

int cmd_validate(const std::string& models, const std::string& trace_path, const std::string& format) {
  const LoadedModelSet in = load_model_set(models);
  std::optional<Trace> trace;
  if (!trace_path.empty()) trace.emplace(read_diff(trace_path));
  const BlameReport report = validate(in.set, trace ? &*trace : nullptr);
  std::cout << (format == "json" ? serialize(report) : render_table(report));
  return exit_for_level(report.level);
}

// -- schema -------------------------------------------------------------------

int cmd_schema(const std::string& source, const std::string& out) {
  emit(serialize(derive_difference_schema(read_metamodel(source))), out);
  return 0;
}

// -- scenario -----------------------------------------------------------------

void print_result(const ScenarioResult& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.row << ")\n";
  std::cout << "  before                 " << format_row(r.before) << "\n";
  for (const auto& o : r.after) {
    std::string label = "after " + std::string(to_string(o.strategy));
    label.resize(22, ' ');
    std::cout << "  " << label << " " << format_row(o.actual) << "\n";
  }
  for (const auto& m : r.mismatches) std::cout << "  mismatch: " << m << "\n";
}

int cmd_scenario(const std::string& name, const std::string& fixtures, const std::string& format) {
  std::vector<std::string> names;
  if (name == "all") {
    names = catalog_fixture_names();
  } else {
    if (!fs::exists(fs::path(fixtures) / name / "fixture.json")) {
      std::cerr << "error: unknown scenario '" << name << "'; valid names: all";
      for (const auto& entry : fs::directory_iterator(fixtures))
        if (fs::exists(entry.path() / "fixture.json")) names.push_back(entry.path().filename().string());
      std::sort(names.begin(), names.end());
      for (const auto& n : names) std::cerr << ", " << n;
      std::cerr << "\n";
      return kExitUsage;
    }
    names = {name};
  }

  std::size_t passed = 0;
  for (const auto& n : names) {
    const ScenarioResult r = assert_matrix(load_fixture(fs::path(fixtures) / n));
    passed += r.passed();
    if (format == "json") {
      std::cout << "{\"name\": \"" << r.name << "\", \"passed\": " << (r.passed() ? "true" : "false")
                << ", \"before\": \"" << format_row(r.before) << "\"";
      for (const auto& o : r.after)
        std::cout << ", \"after-" << to_string(o.strategy) << "\": \"" << format_row(o.actual) << "\"";
      std::cout << "}\n";
    } else {
      print_result(r);
    }
  }
  if (format != "json") std::cout << passed << "/" << names.size() << " PASS\n";
  return passed == names.size() ? 0 : 1;
}

// -- fmt ----------------------------------------------------------------------

int cmd_fmt(const std::string& path) {
  try {
    std::cout << canonicalize(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), path + ": " + e.what(), e.line(), e.column());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-evolve graphical editor definition models with their domain metamodel"};
  app.require_subcommand(1);
  int status = 0;

  std::string format = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table"}));
  };

  std::string old_path, new_path, out, diff_path, models, strategy = "best-effort", trace_path, fixtures,
      source, name, file;
  fixtures = COEVO_DEFAULT_FIXTURES;

  auto* diff = app.add_subcommand("diff", "Compute the difference model between two metamodels");
  diff->add_option("old", old_path, "Old metamodel (.mm.json)")->required();
  diff->add_option("new", new_path, "New metamodel (.mm.json)")->required();
  diff->add_option("--out", out, "Write the diff here instead of stdout");
  diff->callback([&] { status = cmd_diff(old_path, new_path, out); });

  auto* classify = app.add_subcommand("classify", "Classify the changes between two metamodels");
  classify->add_option("old", old_path, "Old metamodel (.mm.json)")->required();
  classify->add_option("new", new_path, "New metamodel (.mm.json)")->required();
  classify->callback([&] { status = cmd_classify(old_path, new_path); });

  auto* adapt = app.add_subcommand("adapt", "Co-change editor models along a difference model");
  adapt->add_option("--diff", diff_path, "Difference model (.diff.json)")->required();
  adapt->add_option("--models", models, "Directory with the five model files")->required();
  adapt->add_option("--strategy", strategy, "minimalistic or best-effort");
  adapt->add_option("--out", out, "Output directory")->required();
  add_format(adapt);
  adapt->callback([&] { status = cmd_adapt(diff_path, models, strategy, out, format); });

  auto* val = app.add_subcommand("validate", "Report per-model blame and the soundness level");
  val->add_option("--models", models, "Directory with the five model files")->required();
  val->add_option("--trace", trace_path, "Difference model used for rename-aware checks");
  add_format(val);
  val->callback([&] { status = cmd_validate(models, trace_path, format); });

  auto* schema = app.add_subcommand("schema", "Derive the difference schema of a metamodel");
  schema->add_option("source", source, "Source metamodel (.mm.json)")->required();
  schema->add_option("--out", out, "Write the schema here instead of stdout");
  schema->callback([&] { status = cmd_schema(source, out); });

  auto* scenario = app.add_subcommand("scenario", "Check catalog fixtures against their expected matrices");
  scenario->add_option("name", name, "Fixture name or 'all'")->required();
  scenario->add_option("--fixtures", fixtures, "Fixture root directory");
  add_format(scenario);
  scenario->callback([&] { status = cmd_scenario(name, fixtures, format); });

  auto* fmt = app.add_subcommand("fmt", "Print a document in canonical form");
  fmt->add_option("file", file, "Any supported document")->required();
  fmt->callback([&] { status = cmd_fmt(file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
    std::cerr << "\n";
    return kExitData;
  } catch (const ConflictError& e) {
    std::cerr << "error: diff does not apply: " << e.what() << "\n";
    return kExitData;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return status;
}
