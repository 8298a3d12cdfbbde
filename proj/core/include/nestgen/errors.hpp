#pragma once

#include <stdexcept>
#include <string>

namespace nestgen {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A diagram already contains a nesting the caller asked to exclude.
class ConstraintViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact division left a nonzero remainder.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A memory or enumeration guard tripped. `level()` is the last level
/// completed (or the requested size, for enumeration guards).
class ResourceExceeded : public std::runtime_error {
 public:
  ResourceExceeded(const std::string& what, int level)
      : std::runtime_error(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

}  // namespace nestgen
