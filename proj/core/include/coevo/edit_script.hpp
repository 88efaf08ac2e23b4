// Small imperative edit language over metamodels, used by fixtures to
// describe an evolved domain model relative to a base one.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coevo/model.hpp"

namespace coevo {

/// One edit. `op` is one of:
///   addClass        name [abstract] [superTypes: comma list] [id]
///   deleteClass     name
///   renameClass     name newName        (supertypes and targets follow)
///   setAbstract     class abstract
///   addSuperType    class superType
///   addAttribute    class name type [id]
///   addReference    class name target [containment] [lowerBound] [upperBound] [id]
///   deleteFeature   class name
///   renameFeature   class name newName
///   moveFeature     class name to
///   changeAttributeType  class name type
///   retargetReference    class name target
struct EditOp {
  std::string op;
  std::map<std::string, std::string> args;

  bool operator==(const EditOp&) const = default;
};

/// Parses a JSON array of objects {"op": ..., <args>}. Scalar argument
/// values are kept in their textual form. Throws ParseError.
std::vector<EditOp> parse_edit_script(std::string_view json_array);

/// Applies the edits in order. Throws ParseError (Schema) for an unknown
/// op, missing argument or missing element, and ParseError (Invariant)
/// when the result is not a valid metamodel.
Metamodel apply_edit_script(Metamodel mm, const std::vector<EditOp>& script);

}  // namespace coevo
