#include <doctest.h>

#include "coevo/edit_script.hpp"
#include "coevo/errors.hpp"
#include "helpers.hpp"

using namespace coevo;

TEST_CASE("edit scripts parse to ops with textual arguments") {
  const auto ops = parse_edit_script(
      R"([{"op": "addClass", "name": "Idea", "abstract": false, "superTypes": ["Topic", "Note"]},
          {"op": "addReference", "class": "Idea", "name": "links", "target": "Topic", "upperBound": 3}])");
  REQUIRE(ops.size() == 2);
  CHECK(ops[0].op == "addClass");
  CHECK(ops[0].args.at("abstract") == "false");
  CHECK(ops[0].args.at("superTypes") == "Topic,Note");
  CHECK(ops[1].args.at("upperBound") == "3");
  CHECK_THROWS_AS(parse_edit_script("{}"), ParseError);
  CHECK_THROWS_AS(parse_edit_script("[{\"name\": \"x\"}]"), ParseError);
}

TEST_CASE("every op applies") {
  const Metamodel base = fixtures::base_set().domain;
  const Metamodel mm = apply_edit_script(base, parse_edit_script(R"([
    {"op": "addClass", "name": "Idea", "superTypes": ["NamedElement"]},
    {"op": "addAttribute", "class": "Idea", "name": "weight", "type": "float"},
    {"op": "addReference", "class": "Idea", "name": "about", "target": "Topic"},
    {"op": "renameClass", "name": "Topic", "newName": "Subject"},
    {"op": "setAbstract", "class": "Note", "abstract": true},
    {"op": "addSuperType", "class": "Note", "superType": "NamedElement"},
    {"op": "renameFeature", "class": "Note", "name": "text", "newName": "body"},
    {"op": "changeAttributeType", "class": "Note", "name": "body", "type": "int"},
    {"op": "moveFeature", "class": "Subject", "name": "name", "to": "NamedElement"},
    {"op": "retargetReference", "class": "Relation", "name": "target", "target": "Idea"},
    {"op": "deleteFeature", "class": "Idea", "name": "about"}
  ])"));
  REQUIRE(mm.find_class("Subject"));
  CHECK(mm.find_class("Topic") == nullptr);
  CHECK(mm.find_class("Mindmap")->find_reference("topics")->target == "Subject");
  CHECK(mm.find_class("Idea")->find_attribute("weight")->type == PrimitiveType::Float);
  CHECK(mm.find_class("Idea")->find_reference("about") == nullptr);
  CHECK(mm.find_class("Note")->is_abstract);
  CHECK(mm.find_class("Note")->find_attribute("body")->type == PrimitiveType::Int);
  CHECK(mm.find_class("NamedElement")->find_attribute("name"));
  CHECK(mm.find_class("Relation")->find_reference("target")->target == "Idea");
}

TEST_CASE("bad edits are rejected") {
  const Metamodel base = fixtures::base_set().domain;
  auto run = [&](const char* script) { return apply_edit_script(base, parse_edit_script(script)); };
  CHECK_THROWS_AS(run(R"([{"op": "explode"}])"), ParseError);
  CHECK_THROWS_AS(run(R"([{"op": "deleteClass"}])"), ParseError);
  CHECK_THROWS_AS(run(R"([{"op": "deleteClass", "name": "Ghost"}])"), ParseError);
  try {
    run(R"([{"op": "addSuperType", "class": "NamedElement", "superType": "Topic"}])");
    FAIL("cycle accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Invariant);
  }
}
