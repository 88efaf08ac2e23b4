// Executable blame matrices: fixtures pairing an editor model set with an
// evolved domain model and the expected verdicts before and after
// co-changes.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coevo/adapt.hpp"
#include "coevo/soundness.hpp"

namespace coevo {

struct MatrixRow {
  Verdicts verdicts{Verdict::Ok, Verdict::Ok, Verdict::Ok, Verdict::Ok};
  int level = 3;

  bool operator==(const MatrixRow&) const = default;
};

/// "× ○ ○ × 1"
std::string format_row(const MatrixRow& row);
MatrixRow row_of(const BlameReport& report);

struct Fixture {
  std::string name;
  std::string row;  // human-readable change name
  std::filesystem::path directory;
  std::filesystem::path models_directory;
  EditorModelSet models;  // editor models consistent with the old domain
  Metamodel evolved;      // new domain model
  std::optional<MatrixRow> expected_before;
  std::vector<std::pair<Strategy, MatrixRow>> expected_after;
};

/// Reads `dir/fixture.json`. The fixture names its model directory
/// ("models", relative to `dir`) and either an edit script ("editScript")
/// or an evolved domain file ("evolved"). Throws IoError or ParseError.
Fixture load_fixture(const std::filesystem::path& dir);

struct StrategyOutcome {
  Strategy strategy;
  MatrixRow actual;
  std::optional<MatrixRow> expected;
  AdaptationPlan plan;
  BlameReport report;
};

struct ScenarioResult {
  std::string name;
  std::string row;
  DiffModel diff;
  MatrixRow before;
  std::optional<MatrixRow> expected_before;
  BlameReport before_report;
  std::vector<StrategyOutcome> after;
  std::vector<std::string> mismatches;  // one line per differing cell

  bool passed() const { return mismatches.empty(); }
};

/// Validates the unchanged editor models against the evolved domain model
/// and the adapted models for each expected strategy (best-effort when
/// none is given), both with the diff's trace, and compares cell by cell.
ScenarioResult assert_matrix(const Fixture& fixture);

/// The eleven catalog rows, in catalog order.
const std::vector<std::string>& catalog_fixture_names();

}  // namespace coevo
