#pragma once

#include <stdexcept>
#include <string>

namespace dl {

/// Raised for invalid inputs: malformed text, violated preconditions,
/// out-of-range labels or tree indices.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dl
