#include <doctest.h>

#include "coevo/classify.hpp"
#include "helpers.hpp"

using namespace coevo;

namespace {

Classification classify_fixture(const std::string& name, DiffModel* diff_out = nullptr) {
  const Fixture f = fixtures::load(name);
  DiffModel d = compute_diff(f.models.domain, f.evolved);
  Classification c = classify_changes(d, f.models.domain, f.evolved);
  if (diff_out) *diff_out = std::move(d);
  return c;
}

}  // namespace

TEST_CASE("each catalog fixture is one catalog change") {
  const std::vector<std::pair<std::string, ChangeKind>> rows = {
      {"add-concrete-class", ChangeKind::AddEmptyConcreteClass},
      {"add-abstract-class", ChangeKind::AddEmptyAbstractClass},
      {"add-specialization", ChangeKind::AddSpecialization},
      {"delete-concrete-class", ChangeKind::DeleteConcreteClass},
      {"rename-class", ChangeKind::RenameClass},
      {"add-property", ChangeKind::AddProperty},
      {"delete-property", ChangeKind::DeleteProperty},
      {"rename-property", ChangeKind::RenameProperty},
      {"move-property", ChangeKind::MoveProperty},
      {"pull-up-property", ChangeKind::PullUpProperty},
      {"change-property-type", ChangeKind::ChangePropertyType},
  };
  for (const auto& [name, kind] : rows) {
    CAPTURE(name);
    DiffModel d;
    const Classification c = classify_fixture(name, &d);
    CHECK(c.unclassified.empty());
    REQUIRE_FALSE(c.changes.empty());
    bool found = false;
    for (const auto& ch : c.changes) found |= ch.kind == kind;
    CHECK(found);
    // Every entry is covered exactly once.
    std::vector<int> cover(d.entries.size(), 0);
    for (const auto& ch : c.changes)
      for (std::size_t i : ch.entries) ++cover[i];
    for (int n : cover) CHECK(n == 1);
  }
}

TEST_CASE("rename bindings") {
  const Classification c = classify_fixture("rename-class");
  REQUIRE(c.changes.size() == 1);
  CHECK(c.changes[0].bindings.at("class") == "Topic");
  CHECK(c.changes[0].bindings.at("newName") == "ScientificTopic");
}

TEST_CASE("the compound evolution matches the added-specialization pattern") {
  const auto cmp = fixtures::compound();
  const Classification c = classify_changes(cmp.diff, cmp.set.domain, cmp.evolved);
  CHECK(c.unclassified.empty());

  std::map<ChangeKind, const CatalogChange*> by_kind;
  for (const auto& ch : c.changes) by_kind[ch.kind] = &ch;
  for (ChangeKind k : {ChangeKind::AddSpecialization, ChangeKind::AddEmptyAbstractClass, ChangeKind::RenameClass,
                       ChangeKind::AddProperty, ChangeKind::PullUpProperty})
    CHECK(by_kind.contains(k));
  CHECK(c.changes.size() == 5);

  const Bindings& spec = by_kind.at(ChangeKind::AddSpecialization)->bindings;
  CHECK(spec.at("class") == "LiteratureTopic");
  CHECK(spec.at("superType") == "NamedElement");
  CHECK(spec.at("added") == "true");
  for (const char* role : {"s1", "s2", "s3", "s3.updated", "s4", "s5"}) CHECK(spec.contains(role));

  const Bindings& pull = by_kind.at(ChangeKind::PullUpProperty)->bindings;
  CHECK(pull.at("owner") == "Topic");
  CHECK(pull.at("feature") == "name");
  CHECK(pull.at("newOwner") == "NamedElement");
  CHECK(pull.contains("s1"));

  CHECK(by_kind.at(ChangeKind::RenameClass)->bindings.at("newName") == "ScientificTopic");
  CHECK(by_kind.at(ChangeKind::AddProperty)->bindings.at("feature") == "duration");
}

TEST_CASE("a new subclass of an existing class is an added specialization") {
  const Classification c = classify_fixture("add-class-as-specialization");
  REQUIRE(c.changes.size() == 1);
  CHECK(c.changes[0].kind == ChangeKind::AddSpecialization);
  CHECK(c.changes[0].bindings.at("added") == "true");
  CHECK(c.changes[0].bindings.at("class") == "Idea");
}

TEST_CASE("toggling abstractness is not a catalog change") {
  Metamodel old_mm = fixtures::base_set().domain;
  Metamodel new_mm = old_mm;
  new_mm.find_class("Note")->is_abstract = true;
  const DiffModel d = compute_diff(old_mm, new_mm);
  const Classification c = classify_changes(d, old_mm, new_mm);
  CHECK(c.changes.empty());
  CHECK(c.unclassified == std::vector<std::size_t>{0});
  CHECK(c.change_for(0) == nullptr);
}

TEST_CASE("change kind names") {
  CHECK(all_change_kinds().size() == 11);
  for (ChangeKind k : all_change_kinds()) CHECK(change_kind_from_string(to_string(k)) == k);
  CHECK_FALSE(change_kind_from_string("Nope"));
}
