#include "coevo/scenario.hpp"

#include "coevo/edit_script.hpp"
#include "coevo/errors.hpp"
#include "coevo/workspace.hpp"
#include "json_support.hpp"

namespace coevo {

std::string format_row(const MatrixRow& row) {
  std::string out;
  for (Verdict v : row.verdicts) {
    out += symbol(v);
    out += ' ';
  }
  return out + std::to_string(row.level);
}

MatrixRow row_of(const BlameReport& report) { return {report.per_model, report.level}; }

const std::vector<std::string>& catalog_fixture_names() {
  static const std::vector<std::string> names = {
      "add-concrete-class", "add-abstract-class", "add-specialization", "delete-concrete-class",
      "rename-class",       "add-property",       "delete-property",    "rename-property",
      "move-property",      "pull-up-property",   "change-property-type",
  };
  return names;
}

namespace {

using detail::Json;
using detail::ObjectReader;

MatrixRow row_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  MatrixRow row;
  for (std::size_t i = 0; i < kBlamedModels.size(); ++i) {
    const std::string key(to_string(kBlamedModels[i]));
    const std::string text = r.string(key);
    auto v = verdict_from_string(text);
    if (!v) detail::schema_error(r.path(key), "unknown verdict '" + text + "'");
    row.verdicts[i] = *v;
  }
  row.level = static_cast<int>(r.uint("level"));
  r.finish();
  return row;
}

}  // namespace

Fixture load_fixture(const std::filesystem::path& dir) {
  const auto file = dir / "fixture.json";
  const Json j = [&] {
    try {
      return detail::parse_json(read_file(file));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), file.string() + ": " + e.what(), e.line(), e.column());
    }
  }();

  try {
    ObjectReader r(j, "");
    Fixture f;
    f.directory = dir;
    f.name = r.string("name");
    f.row = r.string("row");
    f.models_directory = dir / r.string("models");
    f.models = load_model_set(f.models_directory).set;

    const Json* script = r.optional("editScript");
    const auto evolved = r.optional_string("evolved");
    if ((script != nullptr) == evolved.has_value())
      detail::schema_error("", "exactly one of 'editScript' and 'evolved' is required");
    if (script)
      f.evolved = apply_edit_script(f.models.domain, parse_edit_script(script->dump()));
    else
      f.evolved = std::get<Metamodel>(load_model(dir / *evolved, ModelKind::Metamodel));

    if (const Json* expected = r.optional("expected")) {
      ObjectReader e(*expected, "/expected");
      if (const Json* before = e.optional("before")) f.expected_before = row_from_json(*before, e.path("before"));
      if (const Json* after = e.optional("after")) {
        ObjectReader a(*after, e.path("after"));
        for (Strategy s : {Strategy::Minimalistic, Strategy::BestEffort}) {
          const std::string key(to_string(s));
          if (const Json* row = a.optional(key)) f.expected_after.emplace_back(s, row_from_json(*row, a.path(key)));
        }
        a.finish();
      }
      e.finish();
    }
    r.finish();
    return f;
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), file.string() + ": " + e.what(), e.line(), e.column());
  }
}

ScenarioResult assert_matrix(const Fixture& fixture) {
  ScenarioResult result;
  result.name = fixture.name;
  result.row = fixture.row;
  result.diff = compute_diff(fixture.models.domain, fixture.evolved);
  const Trace trace(result.diff);

  auto compare = [&](const std::string& phase, const MatrixRow& actual, const MatrixRow& expected) {
    for (std::size_t i = 0; i < kBlamedModels.size(); ++i)
      if (actual.verdicts[i] != expected.verdicts[i])
        result.mismatches.push_back(phase + " " + std::string(to_string(kBlamedModels[i])) + ": expected " +
                                    std::string(symbol(expected.verdicts[i])) + ", got " +
                                    std::string(symbol(actual.verdicts[i])));
    if (actual.level != expected.level)
      result.mismatches.push_back(phase + " level: expected " + std::to_string(expected.level) + ", got " +
                                  std::to_string(actual.level));
  };

  EditorModelSet before = fixture.models;
  before.domain = fixture.evolved;
  result.before_report = validate(before, &trace);
  result.before = row_of(result.before_report);
  result.expected_before = fixture.expected_before;
  if (fixture.expected_before) compare("before", result.before, *fixture.expected_before);

  std::vector<std::pair<Strategy, std::optional<MatrixRow>>> runs;
  for (const auto& [s, row] : fixture.expected_after) runs.emplace_back(s, row);
  if (runs.empty()) runs.emplace_back(Strategy::BestEffort, std::nullopt);

  for (const auto& [strategy, expected] : runs) {
    StrategyOutcome o{strategy, {}, expected, adapt_all(result.diff, fixture.models, strategy), {}};
    o.report = validate(o.plan.outputs, &trace);
    o.actual = row_of(o.report);
    if (expected) compare("after (" + std::string(to_string(strategy)) + ")", o.actual, *expected);
    result.after.push_back(std::move(o));
  }
  return result;
}

}  // namespace coevo
