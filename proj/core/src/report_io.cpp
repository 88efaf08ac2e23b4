#include "coevo/adapt.hpp"
#include "coevo/soundness.hpp"
#include "json_support.hpp"

namespace coevo {

using detail::Json;

namespace {

Json bindings_json(const Bindings& b) {
  Json j = Json::object();
  for (const auto& [k, v] : b) j[k] = v;
  return j;
}

}  // namespace

std::string serialize(const AdaptationPlan& plan,
                      const std::vector<std::pair<ModelKind, std::string>>& outputs) {
  Json j = detail::header(ModelKind::Plan);
  j["strategy"] = std::string(to_string(plan.strategy));

  Json changes = Json::array();
  for (const auto& c : plan.classification.changes) {
    Json cj = Json::object();
    cj["kind"] = std::string(to_string(c.kind));
    cj["bindings"] = bindings_json(c.bindings);
    cj["entries"] = c.entries;
    changes.push_back(std::move(cj));
  }
  j["changes"] = std::move(changes);
  j["unclassified"] = plan.classification.unclassified;

  Json rules = Json::array();
  for (const auto& r : plan.fired_rules) {
    Json rj = Json::object();
    rj["rule"] = r.rule;
    rj["change"] = r.change;
    rj["bindings"] = bindings_json(r.bindings);
    rules.push_back(std::move(rj));
  }
  j["firedRules"] = std::move(rules);
  j["diagnostics"] = plan.diagnostics;

  Json out = Json::object();
  for (const auto& [kind, path] : outputs) out[std::string(to_string(kind))] = path;
  j["outputs"] = std::move(out);
  return detail::dump(j);
}

std::string serialize(const BlameReport& report) {
  Json j = detail::header(ModelKind::Blame);
  j["level"] = report.level;
  Json per = Json::object();
  for (std::size_t i = 0; i < kBlamedModels.size(); ++i)
    per[std::string(to_string(kBlamedModels[i]))] = std::string(to_string(report.per_model[i]));
  j["perModel"] = std::move(per);
  Json findings = Json::array();
  for (const auto& f : report.findings) {
    Json fj = Json::object();
    fj["severity"] = f.severity == Severity::Broken ? "broken" : "gap";
    fj["model"] = std::string(to_string(f.model));
    fj["code"] = f.code;
    fj["subject"] = f.subject;
    fj["message"] = f.message;
    findings.push_back(std::move(fj));
  }
  j["findings"] = std::move(findings);
  return detail::dump(j);
}

}  // namespace coevo
