#pragma once

#include <stdexcept>
#include <string>

namespace mixcut {

// Malformed input: bad instance data, inconsistent parameters, unparsable
// files. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A step limit or wall-clock budget ran out before a computation finished.
// Partial results are never returned alongside this error.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by is_facet when the candidate cut is not valid at all.
class InvalidCutError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace mixcut
