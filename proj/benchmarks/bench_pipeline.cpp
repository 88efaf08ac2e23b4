#include <benchmark/benchmark.h>

#include "coevo/adapt.hpp"
#include "coevo/diff.hpp"
#include "coevo/scenario.hpp"
#include "coevo/soundness.hpp"
#include "coevo/workspace.hpp"

using namespace coevo;

namespace {

// A chain of n classes, each with three attributes and a containment
// reference to the next; with_ids controls how matching proceeds.
Metamodel chain(int n, bool with_ids) {
  Metamodel mm;
  mm.name = "bench";
  for (int i = 0; i < n; ++i) {
    ClassDef c;
    c.name = "K" + std::to_string(i);
    if (with_ids) c.id = "k" + std::to_string(i);
    if (i > 0 && i % 4 == 0) c.super_types.push_back("K" + std::to_string(i - 1));
    for (int a = 0; a < 3; ++a) {
      AttributeDef at{std::nullopt, "a" + std::to_string(i) + "_" + std::to_string(a), PrimitiveType::String};
      if (with_ids) at.id = "a" + std::to_string(i) + "_" + std::to_string(a);
      c.attributes.push_back(at);
    }
    if (i + 1 < n) {
      ReferenceDef r;
      r.name = "next" + std::to_string(i);
      if (with_ids) r.id = "r" + std::to_string(i);
      r.target = "K" + std::to_string(i + 1);
      r.containment = true;
      c.references.push_back(r);
    }
    mm.classes.push_back(std::move(c));
  }
  return mm;
}

// Renames every fifth class and every seventh attribute.
Metamodel evolve(Metamodel mm) {
  for (std::size_t i = 0; i < mm.classes.size(); ++i) {
    auto& c = mm.classes[i];
    for (std::size_t a = 0; a < c.attributes.size(); ++a)
      if ((i * 3 + a) % 7 == 0) c.attributes[a].name += "x";
  }
  std::map<std::string, std::string> renamed;
  for (std::size_t i = 0; i < mm.classes.size(); i += 5) {
    renamed[mm.classes[i].name] = mm.classes[i].name + "R";
    mm.classes[i].name += "R";
  }
  for (auto& c : mm.classes) {
    for (auto& s : c.super_types)
      if (renamed.contains(s)) s = renamed[s];
    for (auto& r : c.references)
      if (renamed.contains(r.target)) r.target = renamed[r.target];
  }
  return mm;
}

void BM_DiffWithIds(benchmark::State& state) {
  const Metamodel a = chain(static_cast<int>(state.range(0)), true);
  const Metamodel b = evolve(a);
  for (auto _ : state) benchmark::DoNotOptimize(compute_diff(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiffWithIds)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_DiffHeuristic(benchmark::State& state) {
  const Metamodel a = chain(static_cast<int>(state.range(0)), false);
  const Metamodel b = evolve(a);
  for (auto _ : state) benchmark::DoNotOptimize(compute_diff(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiffHeuristic)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_ApplyDiff(benchmark::State& state) {
  const Metamodel a = chain(static_cast<int>(state.range(0)), true);
  const DiffModel d = compute_diff(a, evolve(a));
  for (auto _ : state) benchmark::DoNotOptimize(apply_diff(a, d));
}
BENCHMARK(BM_ApplyDiff)->RangeMultiplier(4)->Range(8, 512);

void BM_ValidateCatalogBase(benchmark::State& state) {
  const EditorModelSet set = load_model_set(std::string(COEVO_FIXTURES_DIR) + "/catalog-base").set;
  for (auto _ : state) benchmark::DoNotOptimize(validate(set));
}
BENCHMARK(BM_ValidateCatalogBase);

void BM_CompoundPipeline(benchmark::State& state) {
  const Fixture f = load_fixture(std::string(COEVO_FIXTURES_DIR) + "/mindmap");
  for (auto _ : state) {
    const DiffModel d = compute_diff(f.models.domain, f.evolved);
    const AdaptationPlan p = adapt_all(d, f.models, Strategy::BestEffort);
    const Trace t(d);
    benchmark::DoNotOptimize(validate(p.outputs, &t));
  }
}
BENCHMARK(BM_CompoundPipeline);

void BM_ScenarioAll(benchmark::State& state) {
  std::vector<Fixture> fixtures;
  for (const auto& n : catalog_fixture_names()) fixtures.push_back(load_fixture(std::string(COEVO_FIXTURES_DIR) + "/" + n));
  for (auto _ : state)
    for (const auto& f : fixtures) benchmark::DoNotOptimize(assert_matrix(f));
}
BENCHMARK(BM_ScenarioAll);

}  // namespace

BENCHMARK_MAIN();
