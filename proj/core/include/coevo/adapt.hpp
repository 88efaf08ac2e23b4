// Rule-based adapters that co-change the editor models after a domain
// metamodel change.
//
// Adapters run in a fixed order: emfgen, tooling, mapping. The mapping
// adapter needs the adapted tooling model because replicated node mappings
// refer to freshly created tools. There is no graph adapter; the graph
// model passes through unchanged.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coevo/classify.hpp"
#include "coevo/diff.hpp"
#include "coevo/evolution.hpp"
#include "coevo/format.hpp"
#include "coevo/model.hpp"

namespace coevo {

enum class Strategy {
  /// Co-change only what is needed to remove errors.
  Minimalistic,
  /// Additionally replicate the handling of analogous elements.
  BestEffort,
};

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view s);

struct FiredRule {
  std::string rule;
  std::string change;  // catalog kind of the triggering change, or "Unclassified"
  Bindings bindings;

  bool operator==(const FiredRule&) const = default;
};

struct AdaptationLog {
  std::vector<FiredRule> fired_rules;
  std::vector<std::string> diagnostics;
};

struct AdaptationContext {
  const Evolution& evolution;
  const Classification& classification;
};

/// Synchronizes generator entries with the new metamodel: renames in
/// place, deletions removed, added classes appended, moved and added
/// features appended to their new owner. `classification`, when given,
/// labels the fired rules.
EmfGenModel adapt_emfgen(const DiffModel& diff, const EmfGenModel& emfgen,
                         AdaptationLog* log = nullptr,
                         const Classification* classification = nullptr);

/// `mapping` is the pre-change mapping model; it binds tools to domain
/// elements.
ToolingModel adapt_tooling(const AdaptationContext& ctx, const MappingModel& mapping,
                           const ToolingModel& tooling, Strategy strategy,
                           AdaptationLog* log = nullptr);

/// `tooling_after` is the output of adapt_tooling.
MappingModel adapt_mapping(const AdaptationContext& ctx, const MappingModel& mapping,
                           const ToolingModel& tooling_after, Strategy strategy,
                           AdaptationLog* log = nullptr);

struct AdaptationPlan {
  Strategy strategy = Strategy::BestEffort;
  Classification classification;
  std::vector<FiredRule> fired_rules;
  std::vector<std::string> diagnostics;
  EditorModelSet outputs;  // outputs.domain is the patched metamodel
};

/// Applies `diff` to `set.domain` and runs all adapters. Throws
/// ConflictError when the diff does not fit the domain model.
AdaptationPlan adapt_all(const DiffModel& diff, const EditorModelSet& set, Strategy strategy);

/// Report document (kind "plan"). `outputs` lists the written files.
std::string serialize(const AdaptationPlan& plan,
                      const std::vector<std::pair<ModelKind, std::string>>& outputs = {});

/// Whole-word occurrence test and replacement; words are runs of
/// [A-Za-z0-9_].
bool contains_word(std::string_view text, std::string_view word);
std::string replace_word(std::string_view text, std::string_view word, std::string_view with);

}  // namespace coevo
