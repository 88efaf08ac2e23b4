// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coevo/adapt.hpp"
#include "coevo/diff.hpp"
#include "coevo/format.hpp"
#include "coevo/scenario.hpp"
#include "coevo/soundness.hpp"
#include "coevo/workspace.hpp"
#include "generators.hpp"

using namespace coevo;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = COEVO_FIXTURES_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(std::move(why));
  }
};

// Blame rows written out cell by cell: E G T M level, with
// '.' for no problem, 'o' for a gap and 'x' for breakage.
struct TableRow {
  const char* fixture;
  const char* before;
  const char* after;
};

constexpr std::array<TableRow, 11> kTable2 = {{
    {"add-concrete-class", "xooo1", ".ooo2"},
    {"add-abstract-class", "x...1", "....3"},
    {"add-specialization", "....3", "....3"},
    {"delete-concrete-class", "xoxx1", ".o..2"},
    {"rename-class", "xoox1", "....3"},
    {"add-property", "xooo1", ".oo.2"},
    {"delete-property", "xoxx1", ".o..2"},
    {"rename-property", "xoox1", "....3"},
    {"move-property", "xoxx1", ".ooo2"},
    {"pull-up-property", "xoxx1", ".o..2"},
    {"change-property-type", ".oxx1", ".ooo2"},
}};

std::string encode(const MatrixRow& row) {
  std::string s;
  for (Verdict v : row.verdicts) s += v == Verdict::Ok ? '.' : v == Verdict::Gap ? 'o' : 'x';
  return s + std::to_string(row.level);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

std::string all_bytes(const EditorModelSet& s) {
  return serialize(s.domain) + serialize(s.graph) + serialize(s.tooling) + serialize(s.mapping) +
         serialize(s.emfgen);
}

Metamodel without_ids(Metamodel mm) {
  for (auto& c : mm.classes) {
    c.id.reset();
    for (auto& a : c.attributes) a.id.reset();
    for (auto& r : c.references) r.id.reset();
  }
  return mm;
}

std::vector<std::string> labels_of(const DiffModel& d) {
  std::vector<std::string> v;
  for (const auto& e : d.entries) {
    const std::string kind(to_string(kind_of(e)));
    v.push_back(std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, AddedClass> || std::is_same_v<T, DeletedClass> ||
                        std::is_same_v<T, ChangedClass>)
            return kind + " " + x.element.name;
          else
            return kind + " " + x.owner + "." + x.element.name;
        },
        e));
  }
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<fs::path> fixture_dirs() {
  std::vector<fs::path> dirs;
  for (const auto& e : fs::directory_iterator(kFixtures))
    if (fs::exists(e.path() / "fixture.json")) dirs.push_back(e.path());
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

// 1 -------------------------------------------------------------------------

Outcome table2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int cells = 0, cells_ok = 0, levels = 0, levels_ok = 0;
  for (const auto& row : kTable2) {
    const ScenarioResult r = assert_matrix(load_fixture(kFixtures / row.fixture));
    const auto after = std::find_if(r.after.begin(), r.after.end(),
                                    [](const StrategyOutcome& s) { return s.strategy == Strategy::BestEffort; });
    if (after == r.after.end()) {
      o.fail(std::string(row.fixture) + ": no best-effort run");
      continue;
    }
    for (const auto& [phase, expected, actual] :
         {std::tuple{"before", std::string(row.before), encode(r.before)},
          std::tuple{"after", std::string(row.after), encode(after->actual)}}) {
      for (std::size_t i = 0; i < 4; ++i) {
        ++cells;
        cells_ok += expected[i] == actual[i];
      }
      ++levels;
      levels_ok += expected[4] == actual[4];
      if (expected != actual) o.fail(std::string(row.fixture) + " " + phase + ": expected " + expected + ", got " + actual);
    }
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + fmt_seconds(s));
  o.detail = std::to_string(cells_ok) + "/" + std::to_string(cells) + " cells, " + std::to_string(levels_ok) + "/" +
             std::to_string(levels) + " levels in " + fmt_seconds(s);
  return o;
}

// 2 -------------------------------------------------------------------------

Outcome compound() {
  Outcome o;
  const Fixture f = load_fixture(kFixtures / "mindmap");
  const DiffModel d = compute_diff(f.models.domain, f.evolved);

  std::vector<std::string> got;
  for (const auto& e : d.entries) {
    if (const auto* c = std::get_if<ChangedClass>(&e))
      got.push_back("ChangedClass " + c->element.name + "->" + c->updated.name);
    else if (const auto* a = std::get_if<AddedClass>(&e))
      got.push_back("AddedClass " + a->element.name + (a->element.is_abstract ? "(abstract)" : ""));
    else if (const auto* ca = std::get_if<ChangedAttribute>(&e))
      got.push_back("ChangedAttribute " + ca->element.name + " " + ca->owner + "->" + ca->new_owner);
    else if (const auto* aa = std::get_if<AddedAttribute>(&e))
      got.push_back("AddedAttribute " + aa->element.name);
    else
      got.push_back(describe(e));
  }
  std::sort(got.begin(), got.end());
  std::vector<std::string> want = {"AddedAttribute duration", "AddedClass LiteratureTopic",
                                   "AddedClass NamedElement(abstract)", "ChangedAttribute name Topic->NamedElement",
                                   "ChangedClass Topic->ScientificTopic"};
  if (got != want) {
    std::string g;
    for (const auto& s : got) g += "[" + s + "] ";
    o.fail("diff entries: " + g);
  }

  const AdaptationPlan p = adapt_all(d, f.models, Strategy::BestEffort);
  const CreationTool* tool = p.outputs.tooling.find_tool("LiteratureTopic");
  if (!tool || tool->description != "Create new LiteratureTopic") o.fail("no LiteratureTopic creation tool");

  const NodeMapping* sci = nullptr;
  const NodeMapping* lit = nullptr;
  for (const auto& tnr : p.outputs.mapping.top_node_references) {
    if (tnr.owned_child.domain_meta_element == "ScientificTopic") sci = &tnr.owned_child;
    if (tnr.owned_child.domain_meta_element == "LiteratureTopic") lit = &tnr.owned_child;
  }
  if (!sci || !lit) {
    o.fail("missing top node reference for ScientificTopic or LiteratureTopic");
  } else {
    if (lit->diagram_node != sci->diagram_node) o.fail("LiteratureTopic uses a different diagram node");
    auto labels = [](const NodeMapping& n) {
      std::vector<std::string> v;
      for (const auto& lm : n.label_mappings) v.push_back(lm.diagram_label);
      return v;
    };
    if (labels(*lit).empty() || labels(*lit) != labels(*sci)) o.fail("LiteratureTopic uses different labels");
  }

  const Trace trace(d);
  const BlameReport r = validate(p.outputs, &trace);
  for (std::size_t i = 0; i < 4; ++i)
    if (r.per_model[i] == Verdict::Broken) o.fail(std::string(to_string(kBlamedModels[i])) + " broken after adaptation");
  o.detail = std::to_string(d.entries.size()) + " entries, after = " + format_row(row_of(r));
  return o;
}

// 3 -------------------------------------------------------------------------

Outcome round_trip() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  testgen::Rng rng(424242);
  int pairs = 0, labelled = 0;
  for (int i = 0; i < 600; ++i) {
    const bool ids = i % 2 == 0;
    const Metamodel base = testgen::random_metamodel(rng);
    testgen::EditedPair pair = testgen::random_edit(rng, base, 6);
    if (!ids) {
      pair.old_mm = without_ids(pair.old_mm);
      pair.new_mm = without_ids(pair.new_mm);
    }
    ++pairs;
    try {
      const DiffModel d = compute_diff(pair.old_mm, pair.new_mm);
      if (canonical_order(apply_diff(pair.old_mm, d)) != canonical_order(pair.new_mm))
        o.fail("pair " + std::to_string(i) + ": apply_diff did not reproduce the new model");
      if (parse_diff(serialize(d)) != d) o.fail("pair " + std::to_string(i) + ": diff document round trip");
      if (ids) {
        ++labelled;
        if (labels_of(d) != pair.labels) o.fail("pair " + std::to_string(i) + ": entries differ from ground truth");
      }
    } catch (const std::exception& e) {
      o.fail("pair " + std::to_string(i) + ": " + e.what());
    }
  }
  const double s = seconds_since(t0);
  if (s >= 30.0) o.fail("took " + fmt_seconds(s));
  o.detail = std::to_string(pairs) + " pairs (" + std::to_string(labelled) + " with ids) in " + fmt_seconds(s);
  return o;
}

// 4 -------------------------------------------------------------------------

Outcome mm2mmd() {
  Outcome o;
  testgen::Rng rng(5150);
  int schemas = 0;
  for (int i = 0; i < 200; ++i) {
    testgen::MetamodelOptions opt;
    opt.min_classes = opt.max_classes = std::uniform_int_distribution<int>(1, 50)(rng);
    const Metamodel src = testgen::random_metamodel(rng, opt);
    const DifferenceSchema s = derive_difference_schema(src);
    ++schemas;
    if (s.classes.size() != 3 * src.classes.size()) o.fail("N=" + std::to_string(src.classes.size()) + ": wrong class count");
    for (const auto& c : s.classes) {
      if (c.name.rfind("Changed", 0) != 0) continue;
      const ReferenceDef* u = c.find_reference("updatedElement");
      if (!u || u->target != c.super_types.at(0)) o.fail(c.name + " lacks updatedElement");
    }
  }
  const DifferenceSchema ecore = derive_difference_schema(ecore_subset());
  for (const char* name : {"AddedEClass", "DeletedEClass", "ChangedEClass", "AddedEAttribute", "ChangedEAttribute"})
    if (std::none_of(ecore.classes.begin(), ecore.classes.end(), [&](const ClassDef& c) { return c.name == name; }))
      o.fail(std::string("Ecore subset schema lacks ") + name);
  o.detail = std::to_string(schemas) + " schemas with N in 1..50, Ecore subset checked";
  return o;
}

// 5 -------------------------------------------------------------------------

Outcome graph_pass_through() {
  Outcome o;
  int runs = 0;
  for (const auto& dir : fixture_dirs()) {
    const Fixture f = load_fixture(dir);
    const LoadedModelSet raw = load_model_set(f.models_directory);
    const std::string graph_bytes = raw.raw.at(ModelKind::Graph);
    const DiffModel d = compute_diff(f.models.domain, f.evolved);
    for (Strategy s : {Strategy::Minimalistic, Strategy::BestEffort}) {
      ++runs;
      if (serialize(adapt_all(d, f.models, s).outputs.graph) != graph_bytes)
        o.fail(f.name + " (" + std::string(to_string(s)) + "): graph changed");
    }
  }
  testgen::Rng rng(8080);
  for (int i = 0; i < 100; ++i) {
    const EditorModelSet set = testgen::random_model_set(rng);
    const std::string graph_bytes = serialize(set.graph);
    const auto pair = testgen::random_edit(rng, set.domain, 6);
    const DiffModel d = compute_diff(pair.old_mm, pair.new_mm);
    const Strategy s = i % 2 ? Strategy::Minimalistic : Strategy::BestEffort;
    ++runs;
    try {
      if (serialize(adapt_all(d, set, s).outputs.graph) != graph_bytes)
        o.fail("random set " + std::to_string(i) + ": graph changed");
    } catch (const std::exception& e) {
      o.fail("random set " + std::to_string(i) + ": " + e.what());
    }
  }
  o.detail = std::to_string(runs) + " adaptations";
  return o;
}

// 6 -------------------------------------------------------------------------

Outcome identity_and_determinism() {
  Outcome o;
  std::vector<EditorModelSet> sets;
  for (const auto& dir : fixture_dirs()) sets.push_back(load_fixture(dir).models);
  testgen::Rng rng(31337);
  for (int i = 0; i < 30; ++i) sets.push_back(testgen::random_model_set(rng));

  int identity = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Strategy s : {Strategy::Minimalistic, Strategy::BestEffort}) {
      ++identity;
      if (all_bytes(adapt_all(DiffModel{}, sets[i], s).outputs) != all_bytes(sets[i]))
        o.fail("set " + std::to_string(i) + ": empty diff changed an editor model");
    }

  // Whole pipeline twice: diff, adapt, validate, reports.
  auto pipeline = [](const Fixture& f, Strategy s) {
    const DiffModel d = compute_diff(f.models.domain, f.evolved);
    const AdaptationPlan p = adapt_all(d, f.models, s);
    const Trace t(d);
    return serialize(d) + all_bytes(p.outputs) + serialize(p) + serialize(validate(p.outputs, &t)) +
           serialize(derive_difference_schema(f.models.domain));
  };
  int pipelines = 0;
  for (const auto& dir : fixture_dirs()) {
    const Fixture f = load_fixture(dir);
    for (Strategy s : {Strategy::Minimalistic, Strategy::BestEffort}) {
      ++pipelines;
      if (pipeline(f, s) != pipeline(load_fixture(dir), s)) o.fail(f.name + ": pipeline output differs between runs");
    }
  }
  o.detail = std::to_string(identity) + " identity runs, " + std::to_string(pipelines) + " repeated pipelines";
  return o;
}

// 7 -------------------------------------------------------------------------

Outcome strategies() {
  Outcome o;
  const ScenarioResult r = assert_matrix(load_fixture(kFixtures / "add-class-as-specialization"));
  const Fixture f = load_fixture(kFixtures / "add-class-as-specialization");
  int mini_level = 0, best_level = 0;
  for (const auto& run : r.after) {
    if (run.strategy == Strategy::Minimalistic) {
      mini_level = run.actual.level;
      const EditorModelSet& out = run.plan.outputs;
      if (serialize(out.graph) != serialize(f.models.graph)) o.fail("minimalistic changed the graph model");
      if (serialize(out.tooling) != serialize(f.models.tooling)) o.fail("minimalistic changed the tooling model");
      if (serialize(out.mapping) != serialize(f.models.mapping)) o.fail("minimalistic changed the mapping model");
      if (serialize(out.emfgen) == serialize(f.models.emfgen)) o.fail("minimalistic left the generator model alone");
    } else {
      best_level = run.actual.level;
    }
  }
  if (mini_level != 2) o.fail("minimalistic level " + std::to_string(mini_level) + ", expected 2");
  if (best_level != 3) o.fail("best-effort level " + std::to_string(best_level) + ", expected 3");
  o.detail = "minimalistic level " + std::to_string(mini_level) + ", best-effort level " + std::to_string(best_level);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"catalog blame matrices", table2},
      {"compound mind-map scenario", compound},
      {"diff round trip and ground truth", round_trip},
      {"difference schema structure", mm2mmd},
      {"graph pass-through", graph_pass_through},
      {"identity and determinism", identity_and_determinism},
      {"strategy comparison", strategies},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << ". " << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    for (const auto& p : o.problems) std::cout << "        " << p << "\n";
  }
  std::cout << (n - failed) << "/" << n << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
