#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbs {

/// A caller broke a documented precondition (bad permutation, size mismatch, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An invariant the library maintains itself was violated. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A parameter lies outside the domain of a formula or generator.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed external input. Carries the source name and 1-based line (0 if unknown).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string{}) +
                           ": " + what),
        source_(source),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace cbs
