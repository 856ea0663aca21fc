#ifndef INCPATH_ERRORS_HPP
#define INCPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace incpath {

// Raised when a request exceeds a configured size cap (exact enumeration,
// rational tables). The CLI maps it to exit code 3.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Raised when an operation needs a label model the ordering does not use.
class unsupported_model_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace incpath

#endif  // INCPATH_ERRORS_HPP
