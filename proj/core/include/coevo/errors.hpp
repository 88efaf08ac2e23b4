#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coevo {

/// Failure to turn a document into a typed model.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,     // not well-formed JSON; line/column are set
    Schema,     // wrong shape: missing/unknown key, wrong type, wrong kind
    Version,    // unsupported formatVersion
    Invariant,  // well-formed but violates a model invariant
  };

  ParseError(Kind kind, std::string message, std::size_t line = 0, std::size_t column = 0);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// apply_diff found an entry whose old-side element is missing or claimed twice.
class ConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A helper was asked about an element with no counterpart.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file or directory could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coevo
