#include <doctest.h>

#include "coevo/adapt.hpp"
#include "coevo/soundness.hpp"
#include "helpers.hpp"

using namespace coevo;

namespace {

bool has_finding(const BlameReport& r, ModelKind m, const std::string& code) {
  return std::any_of(r.findings.begin(), r.findings.end(),
                     [&](const Finding& f) { return f.model == m && f.code == code; });
}

}  // namespace

TEST_CASE("level table over all 81 verdict combinations") {
  const Verdict all[] = {Verdict::Ok, Verdict::Gap, Verdict::Broken};
  int checked = 0;
  for (Verdict a : all)
    for (Verdict b : all)
      for (Verdict c : all)
        for (Verdict d : all) {
          const Verdicts v{a, b, c, d};
          int broken = 0, gaps = 0;
          for (Verdict x : v) {
            broken += x == Verdict::Broken;
            gaps += x == Verdict::Gap;
          }
          const int expected = broken > 0 ? 1 : gaps > 0 ? 2 : 3;
          CHECK(soundness_level(v) == expected);
          ++checked;
        }
  CHECK(checked == 81);
}

TEST_CASE("pristine models are sound") {
  const BlameReport r = validate(fixtures::base_set());
  CHECK(r.level == 3);
  CHECK(r.findings.empty());
  for (ModelKind m : kBlamedModels) CHECK(r.verdict(m) == Verdict::Ok);
}

TEST_CASE("verdict strings") {
  CHECK(symbol(Verdict::Ok) == "•");
  CHECK(symbol(Verdict::Gap) == "○");
  CHECK(symbol(Verdict::Broken) == "×");
  for (Verdict v : {Verdict::Ok, Verdict::Gap, Verdict::Broken}) {
    CHECK(verdict_from_string(to_string(v)) == v);
    CHECK(verdict_from_string(symbol(v)) == v);
  }
  CHECK_FALSE(verdict_from_string("?"));
}

TEST_CASE("generator model drift is breakage") {
  EditorModelSet s = fixtures::base_set();
  s.emfgen.gen_classes.erase(s.emfgen.gen_classes.begin());
  const BlameReport r = validate(s);
  CHECK(r.verdict(ModelKind::EmfGen) == Verdict::Broken);
  CHECK(has_finding(r, ModelKind::EmfGen, "missing-genclass"));
  CHECK(r.level == 1);
}

TEST_CASE("unused palette tool and figure are gaps") {
  EditorModelSet s = fixtures::base_set();
  s.tooling.palette.at(0).tools.push_back({"Spare", "nothing"});
  s.graph.figures.push_back({"SpareFigure", FigureKind::Ellipse});
  const BlameReport r = validate(s);
  CHECK(has_finding(r, ModelKind::Tooling, "unbound-tool"));
  CHECK(has_finding(r, ModelKind::Graph, "unused-element"));
  CHECK(r.verdict(ModelKind::Tooling) == Verdict::Gap);
  CHECK(r.verdict(ModelKind::Graph) == Verdict::Gap);
  CHECK(r.level == 2);
}

TEST_CASE("mapping breakage") {
  EditorModelSet s = fixtures::base_set();
  s.mapping.top_node_references.at(0).owned_child.label_mappings.at(0).features.at(0).recorded_type_name = "int";
  s.mapping.link_mappings.at(0).diagram_link = "Nowhere";
  const BlameReport r = validate(s);
  CHECK(has_finding(r, ModelKind::Mapping, "stale-type"));
  CHECK(has_finding(r, ModelKind::Mapping, "dangling-graph-element"));
  CHECK(r.verdict(ModelKind::Mapping) == Verdict::Broken);
}

TEST_CASE("a trace softens rename staleness") {
  const Fixture f = fixtures::load("rename-class");
  EditorModelSet s = f.models;
  s.domain = f.evolved;
  const DiffModel d = compute_diff(f.models.domain, f.evolved);
  const Trace t(d);
  const BlameReport with = validate(s, &t);
  const BlameReport without = validate(s);
  CHECK(with.verdict(ModelKind::Tooling) == Verdict::Gap);
  CHECK(has_finding(with, ModelKind::Tooling, "stale-tool-binding"));
  CHECK_FALSE(has_finding(with, ModelKind::Tooling, "dangling-tool-binding"));
  // Name-based checking can only be stricter.
  for (std::size_t i = 0; i < 4; ++i) CHECK(static_cast<int>(without.per_model[i]) >= static_cast<int>(with.per_model[i]));
}

TEST_CASE("a tool still titled after the old class name is a gap") {
  const Fixture f = fixtures::load("rename-class");
  EditorModelSet s = f.models;
  s.domain = f.evolved;
  const DiffModel d = compute_diff(f.models.domain, f.evolved);
  const Trace t(d);
  // Mapping and generator follow the rename; the palette does not.
  const AdaptationPlan p = adapt_all(d, f.models, Strategy::Minimalistic);
  s.mapping = p.outputs.mapping;
  s.emfgen = p.outputs.emfgen;
  for (auto& tnr : s.mapping.top_node_references)
    if (tnr.owned_child.domain_meta_element == "ScientificTopic") tnr.owned_child.tool = "Topic";
  const BlameReport r = validate(s, &t);
  CHECK(has_finding(r, ModelKind::Tooling, "stale-tool-title"));
  CHECK(r.verdict(ModelKind::Tooling) == Verdict::Gap);
}

TEST_CASE("findings are ordered and reports are pure") {
  const Fixture f = fixtures::load("delete-concrete-class");
  EditorModelSet s = f.models;
  s.domain = f.evolved;
  const BlameReport a = validate(s);
  const BlameReport b = validate(s);
  CHECK(a == b);
  CHECK(serialize(a) == serialize(b));
  for (std::size_t i = 1; i < a.findings.size(); ++i) {
    const Finding& x = a.findings[i - 1];
    const Finding& y = a.findings[i];
    const auto rank = [](ModelKind m) {
      return std::find(kBlamedModels.begin(), kBlamedModels.end(), m) - kBlamedModels.begin();
    };
    CHECK(std::tuple(rank(x.model), x.code, x.subject) < std::tuple(rank(y.model), y.code, y.subject));
  }
}

TEST_CASE("report rendering") {
  const BlameReport r = validate(fixtures::base_set());
  const std::string table = render_table(r);
  CHECK(table.find("EmfGen") != std::string::npos);
  CHECK(table.find("•") != std::string::npos);
  const std::string json = serialize(r);
  CHECK(json.find("\"kind\": \"blame\"") != std::string::npos);
  CHECK(json.find("\"level\": 3") != std::string::npos);
}
