#pragma once

#include <stdexcept>
#include <string>

namespace armine {

// Data and state errors raised by the library. The CLI maps these to
// exit code 1; command-line misuse is reported separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace armine
