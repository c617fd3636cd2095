#pragma once

#include <stdexcept>
#include <string>

namespace cmpl {

/// Input lies outside the domain where the requested object is defined
/// (convergence discs, nonzero arguments, matching fields, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The requested number of certified digits cannot be reached within the
/// configured iteration caps.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (element syntax, JSON shape, config lines).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cmpl
