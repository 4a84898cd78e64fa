#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymlog {

/// A precondition of a mathematical operation was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input. `position` is a 0-based byte offset into the parsed
/// text; `expected` lists the token kinds that would have been accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position,
             std::vector<std::string> expected = {});

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Evaluation referenced a variable that the assignment does not bind.
class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace asymlog
