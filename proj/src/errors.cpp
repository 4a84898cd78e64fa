#include "asymlog/errors.hpp"

#include <sstream>
#include <utility>

namespace asymlog {
namespace {

std::string render(const std::string& message, std::size_t position,
                   const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "syntax error at position " << position << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << ", ";
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t position,
                       std::vector<std::string> expected)
    : std::runtime_error(render(message, position, expected)),
      detail_(std::move(message)),
      position_(position),
      expected_(std::move(expected)) {}

UnboundVariable::UnboundVariable(std::string name)
    : std::runtime_error("unbound variable '" + name + "'"), name_(std::move(name)) {}

}  // namespace asymlog
