#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emojiprof {

// Coarse classification used by the CLI to pick an exit code.
enum class ErrorCategory { Usage, Data, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Bad argument or precondition violation from the caller.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(ErrorCategory::Usage, what) {}
};

// Invalid generator or run configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCategory::Usage, what) {}
};

// Malformed input row; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCategory::Data, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConflictError : public Error {
 public:
  explicit ConflictError(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

// Inputs built against different lexicons, manifests or schema versions.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

// Quantity is undefined for the given input (e.g. a ratio with a zero denominator).
class UndefinedError : public Error {
 public:
  explicit UndefinedError(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorCategory::Numerical, what) {}
};

// Test statistic undefined because the pooled proportion is 0 or 1.
class DegenerateError : public NumericalError {
 public:
  explicit DegenerateError(const std::string& what) : NumericalError(what) {}
};

// 2 usage, 3 data, 4 numerical.
int exit_code_for(ErrorCategory category) noexcept;

}  // namespace emojiprof
