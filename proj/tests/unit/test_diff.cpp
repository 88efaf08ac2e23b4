#include <doctest.h>

#include "coevo/diff.hpp"
#include "coevo/errors.hpp"
#include "coevo/format.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "labels.hpp"

using namespace coevo;

TEST_CASE("identical metamodels have an empty diff") {
  const Metamodel mm = fixtures::base_set().domain;
  CHECK(compute_diff(mm, mm).empty());
  testgen::Rng rng(7);
  CHECK(compute_diff(mm, testgen::permuted(mm, rng)).empty());
}

TEST_CASE("the mind-map evolution yields exactly five entries") {
  const auto c = fixtures::compound();
  REQUIRE(c.diff.entries.size() == 5);

  int seen = 0;
  for (const auto& e : c.diff.entries) {
    if (const auto* ch = std::get_if<ChangedClass>(&e)) {
      CHECK(ch->element.name == "Topic");
      CHECK(ch->updated.name == "ScientificTopic");
      ++seen;
    } else if (const auto* add = std::get_if<AddedClass>(&e)) {
      if (add->element.name == "NamedElement") {
        CHECK(add->element.is_abstract);
        ++seen;
      } else {
        CHECK(add->element.name == "LiteratureTopic");
        CHECK_FALSE(add->element.is_abstract);
        ++seen;
      }
    } else if (const auto* ca = std::get_if<ChangedAttribute>(&e)) {
      CHECK(ca->owner == "Topic");
      CHECK(ca->element.name == "name");
      CHECK(ca->new_owner == "NamedElement");
      CHECK(ca->updated.name == "name");
      ++seen;
    } else if (const auto* aa = std::get_if<AddedAttribute>(&e)) {
      CHECK(aa->element.name == "duration");
      ++seen;
    } else {
      FAIL("unexpected entry " << describe(e));
    }
  }
  CHECK(seen == 5);
}

TEST_CASE("diff documents round-trip") {
  const auto c = fixtures::compound();
  const std::string text = serialize(c.diff);
  CHECK(parse_diff(text) == c.diff);
  CHECK(canonicalize(text) == text);
  CHECK(peek_kind(text) == ModelKind::Diff);
}

TEST_CASE("jaccard") {
  CHECK(jaccard({}, {}) == 0.0);
  CHECK(jaccard({"a"}, {}) == 0.0);
  CHECK(jaccard({"a", "b"}, {"b", "c"}) == doctest::Approx(1.0 / 3.0));
  CHECK(jaccard({"a", "b"}, {"a", "b"}) == 1.0);
}

TEST_CASE("without ids a renamed class is recognised by its features") {
  Metamodel old_mm;
  old_mm.name = "m";
  old_mm.classes = {{std::nullopt,
                     "Topic",
                     false,
                     {},
                     {{std::nullopt, "title", PrimitiveType::String}, {std::nullopt, "rank", PrimitiveType::Int}},
                     {}}};
  Metamodel new_mm = old_mm;
  new_mm.classes[0].name = "Subject";
  const DiffModel d = compute_diff(old_mm, new_mm);
  CHECK(entry_labels(d) == std::vector<std::string>{"ChangedClass Topic"});
  CHECK(apply_diff(old_mm, d) == new_mm);
}

TEST_CASE("without ids a moved feature is recognised") {
  Metamodel old_mm;
  old_mm.name = "m";
  old_mm.classes = {{std::nullopt, "A", false, {}, {{std::nullopt, "size", PrimitiveType::Int}}, {}},
                    {std::nullopt, "B", false, {}, {}, {}}};
  Metamodel new_mm = old_mm;
  new_mm.classes[1].attributes = old_mm.classes[0].attributes;
  new_mm.classes[0].attributes.clear();
  const DiffModel d = compute_diff(old_mm, new_mm);
  CHECK(entry_labels(d) == std::vector<std::string>{"ChangedAttribute A.size"});
}

TEST_CASE("apply_diff rejects diffs that do not fit") {
  const auto c = fixtures::compound();
  CHECK(canonical_order(apply_diff(c.set.domain, c.diff)) == canonical_order(c.evolved));

  Metamodel other = c.set.domain;
  other.find_class("Topic")->attributes.clear();
  CHECK_THROWS_AS(apply_diff(other, c.diff), ConflictError);

  DiffModel twice = c.diff;
  twice.entries.push_back(c.diff.entries.front());
  CHECK_THROWS_AS(apply_diff(c.set.domain, twice), ConflictError);
}

TEST_CASE("random pairs: round trip and ground-truth labels") {
  testgen::Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    const auto base = testgen::random_metamodel(rng);
    const auto pair = testgen::random_edit(rng, base, 6);
    CAPTURE(i);
    CAPTURE(pair.script);
    const DiffModel d = compute_diff(pair.old_mm, pair.new_mm);
    CHECK(entry_labels(d) == pair.labels);
    CHECK(canonical_order(apply_diff(pair.old_mm, d)) == canonical_order(pair.new_mm));
  }
}

// -- difference schema --------------------------------------------------------

TEST_CASE("difference schema has three classes per source class") {
  testgen::Rng rng(3);
  for (int n = 1; n <= 50; ++n) {
    testgen::MetamodelOptions opt;
    opt.min_classes = opt.max_classes = n;
    const Metamodel src = testgen::random_metamodel(rng, opt);
    const DifferenceSchema s = derive_difference_schema(src);
    REQUIRE(s.classes.size() == 3 * static_cast<std::size_t>(n));
    for (const auto& mc : src.classes) {
      for (const char* prefix : {"Added", "Deleted", "Changed"}) {
        const auto it = std::find_if(s.classes.begin(), s.classes.end(),
                                     [&](const ClassDef& c) { return c.name == prefix + mc.name; });
        REQUIRE(it != s.classes.end());
        CHECK(it->super_types == std::vector<std::string>{mc.name});
        if (std::string(prefix) == "Changed") {
          const ReferenceDef* u = it->find_reference("updatedElement");
          REQUIRE(u);
          CHECK(u->target == mc.name);
          CHECK(u->lower_bound == 1);
          CHECK(u->upper_bound == 1u);
        }
      }
    }
  }
}

TEST_CASE("difference schema of the Ecore subset") {
  const DifferenceSchema s = derive_difference_schema(ecore_subset());
  std::vector<std::string> names;
  for (const auto& c : s.classes) names.push_back(c.name);
  for (const char* expected : {"AddedEClass", "DeletedEClass", "ChangedEClass", "AddedEAttribute",
                               "DeletedEAttribute", "ChangedEAttribute", "AddedEReference",
                               "DeletedEReference", "ChangedEReference"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  CHECK(names.size() == 9);

  const std::string text = serialize(s);
  CHECK(parse_difference_schema(text) == s);
  CHECK(canonicalize(text) == text);
}
