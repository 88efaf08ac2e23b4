// Editor soundness: per-model blame and the overall level.
//
//   level 1  some model is broken (×)
//   level 2  nothing broken, some capability missing (○)
//   level 3  sound as far as automation can tell (•)
//
// Level 4 needs a human and is never produced.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coevo/evolution.hpp"
#include "coevo/format.hpp"
#include "coevo/model.hpp"

namespace coevo {

enum class Verdict { Ok, Gap, Broken };

std::string_view to_string(Verdict v);  // "ok", "gap", "broken"
std::string_view symbol(Verdict v);     // "•", "○", "×"
std::optional<Verdict> verdict_from_string(std::string_view s);  // accepts both forms

enum class Severity { Broken, Gap };

/// The four blamable models, in report order.
inline constexpr std::array<ModelKind, 4> kBlamedModels = {ModelKind::EmfGen, ModelKind::Graph,
                                                           ModelKind::Tooling, ModelKind::Mapping};

struct Finding {
  Severity severity;
  ModelKind model;
  std::string code;
  std::string subject;
  std::string message;

  bool operator==(const Finding&) const = default;
};

using Verdicts = std::array<Verdict, 4>;  // indexed like kBlamedModels

/// 1 if any Broken, else 2 if any Gap, else 3.
int soundness_level(const Verdicts& v);

struct BlameReport {
  Verdicts per_model{Verdict::Ok, Verdict::Ok, Verdict::Ok, Verdict::Ok};
  std::vector<Finding> findings;  // ordered by model, code, subject
  int level = 3;

  bool operator==(const BlameReport&) const = default;
  Verdict verdict(ModelKind m) const;
};

/// Checks the editor models against their domain model. With a trace,
/// links that dangle only because an element was renamed count as gaps
/// instead of breakage, and labels named after an element's old name are
/// accepted.
BlameReport validate(const EditorModelSet& set, const Trace* trace = nullptr);

std::string serialize(const BlameReport& report);
/// Terminal rendering with the ×/○/• symbols, one row per model plus the
/// findings.
std::string render_table(const BlameReport& report);

}  // namespace coevo
