#pragma once

#include <stdexcept>
#include <string>

namespace eulerdec {

// Raised for every domain-level failure: violated preconditions, malformed
// input text, out-of-range parameters. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eulerdec
