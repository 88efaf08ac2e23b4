#include <doctest.h>

#include "coevo/model.hpp"
#include "helpers.hpp"

using namespace coevo;

namespace {

Metamodel diamond() {
  Metamodel mm;
  mm.name = "d";
  mm.classes = {
      {std::nullopt, "Root", true, {}, {}, {}},
      {std::nullopt, "Left", true, {"Root"}, {{std::nullopt, "l", PrimitiveType::Int}}, {}},
      {std::nullopt, "Right", false, {"Root"}, {{std::nullopt, "r", PrimitiveType::String}}, {}},
      {std::nullopt, "Leaf", false, {"Left", "Right"}, {{std::nullopt, "x", PrimitiveType::Boolean}}, {}},
  };
  return mm;
}

}  // namespace

TEST_CASE("ancestors are depth-first without duplicates") {
  const Metamodel mm = diamond();
  CHECK(mm.ancestors("Leaf") == std::vector<std::string>{"Left", "Root", "Right"});
  CHECK(mm.ancestors("Root").empty());
  CHECK(mm.is_ancestor("Root", "Leaf"));
  CHECK_FALSE(mm.is_ancestor("Leaf", "Root"));
  CHECK_FALSE(mm.is_ancestor("Leaf", "Leaf"));
  auto d = mm.descendants("Root");
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::string>{"Leaf", "Left", "Right"});
}

TEST_CASE("all_attributes lists inherited attributes before own ones") {
  const Metamodel mm = diamond();
  std::vector<std::string> got;
  for (const auto& oa : mm.all_attributes("Leaf")) got.push_back(oa.owner + "." + oa.attribute->name);
  CHECK(got == std::vector<std::string>{"Left.l", "Right.r", "Leaf.x"});
}

TEST_CASE("declared_feature_type reports primitive names and reference targets") {
  const Metamodel mm = fixtures::base_set().domain;
  CHECK(mm.declared_feature_type("Topic", "name") == "string");
  CHECK(mm.declared_feature_type("Mindmap", "topics") == "Topic");
  CHECK_FALSE(mm.declared_feature_type("Topic", "text"));
  CHECK_FALSE(mm.declared_feature_type("Nope", "name"));
}

TEST_CASE("the root container plays the canvas") {
  const Metamodel mm = fixtures::base_set().domain;
  CHECK(mm.is_canvas("Mindmap"));
  CHECK_FALSE(mm.is_canvas("Topic"));
  CHECK_FALSE(mm.is_canvas("NamedElement"));
}

TEST_CASE("metamodel invariants") {
  Metamodel mm = diamond();
  CHECK_FALSE(check_invariants(mm));

  SUBCASE("inheritance cycle") {
    mm.find_class("Root")->super_types.push_back("Leaf");
    REQUIRE(check_invariants(mm));
    CHECK(check_invariants(mm)->find("cycle") != std::string::npos);
  }
  SUBCASE("dangling supertype") {
    mm.find_class("Leaf")->super_types.push_back("Ghost");
    CHECK(check_invariants(mm));
  }
  SUBCASE("duplicate class") {
    mm.classes.push_back(mm.classes.front());
    CHECK(check_invariants(mm));
  }
  SUBCASE("duplicate id") {
    mm.classes[0].id = "x";
    mm.classes[1].attributes[0].id = "x";
    CHECK(check_invariants(mm));
  }
  SUBCASE("bounds") {
    mm.classes[0].references.push_back({std::nullopt, "r0", "Leaf", false, 2, 1});
    CHECK(check_invariants(mm));
  }
  SUBCASE("non-identifier") {
    mm.classes[0].name = "9lives";
    CHECK(check_invariants(mm));
  }
}

TEST_CASE("is_identifier") {
  CHECK(is_identifier("_a1"));
  CHECK(is_identifier("Topic"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("1a"));
  CHECK_FALSE(is_identifier("a-b"));
}

TEST_CASE("canonical_order makes equality order-insensitive") {
  Metamodel a = diamond();
  Metamodel b = a;
  std::reverse(b.classes.begin(), b.classes.end());
  CHECK_FALSE(a == b);
  CHECK(canonical_order(a) == canonical_order(b));
}

TEST_CASE("editor model lookups") {
  const EditorModelSet s = fixtures::base_set();
  CHECK(s.graph.has_node("Topic"));
  CHECK(s.graph.has_connection("Relation"));
  CHECK(s.graph.has_label("TopicName"));
  CHECK_FALSE(s.graph.has_node("Relation"));
  REQUIRE(s.tooling.find_tool("Note"));
  CHECK(s.tooling.find_tool("Note")->description == "Create new Note");
  CHECK(s.tooling.titles() == std::vector<std::string>{"Topic", "Note", "Relation"});
  REQUIRE(s.emfgen.find("Topic"));
  CHECK(s.emfgen.find("Ghost") == nullptr);
}
