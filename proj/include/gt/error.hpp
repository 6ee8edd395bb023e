#pragma once

#include <stdexcept>
#include <string>

namespace gt {

// User-level failure: bad input, violated precondition, malformed file.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A theorem the engine rechecks at runtime failed to hold. Always a bug,
// never a user error; the CLI maps this to exit code 2.
class TheoremViolation : public Error {
public:
  explicit TheoremViolation(const std::string& what) : Error(what) {}
};

}  // namespace gt
