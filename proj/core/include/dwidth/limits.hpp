#pragma once

#include <stdexcept>
#include <string>

namespace dwidth {

// Raised when an exponential routine is asked to run above its soft size
// limit. The limits can be lifted with the DWIDTH_MAX_N environment variable.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The soft vertex limit for `routine`: DWIDTH_MAX_N when set, otherwise
// `default_limit`.
int soft_limit(int default_limit);

// Throws SizeLimitExceeded when n exceeds soft_limit(default_limit).
void require_size(const char* routine, int n, int default_limit);

}  // namespace dwidth
