#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymlog/gamma.hpp"

namespace asymlog::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; with --json both are JSON documents on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A file could not be opened.
class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string& path);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A malformed line in a generator file. `line` is 1-based; `column` is the
/// 0-based offset of the syntax error within the line.
class LineError : public std::runtime_error {
 public:
  LineError(std::string path, std::size_t line, std::size_t column, const std::string& detail);
  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t column_;
};

/// Generator file: one element per line; blank lines and lines whose first
/// non-blank character is `#` are skipped.
std::vector<GammaElement> load_generators(const std::string& path);

}  // namespace asymlog::cli
