#pragma once

#include <stdexcept>

namespace gccp {

/// Input violates an instance or argument contract. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work refused because it would exceed a configured cap. The CLI maps this to exit code 2.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gccp
