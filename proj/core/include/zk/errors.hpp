#pragma once

#include <stdexcept>
#include <string>

namespace zk {

/// Text that does not follow the polynomial / list grammar.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain constraint (canonical window,
/// k >= 1, lambda != 0, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated computation failed to stabilise before its hard cap. Always a
/// bug in a bound, never a property of the input.
class StabilisationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zk
