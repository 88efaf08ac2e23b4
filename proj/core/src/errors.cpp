#include "coevo/errors.hpp"

namespace coevo {

ParseError::ParseError(Kind kind, std::string message, std::size_t line, std::size_t column)
    : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

}  // namespace coevo
