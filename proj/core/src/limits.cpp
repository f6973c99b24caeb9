#include "dwidth/limits.hpp"

#include <cstdlib>

namespace dwidth {

int soft_limit(int default_limit) {
  const char* env = std::getenv("DWIDTH_MAX_N");
  if (env == nullptr || *env == '\0') return default_limit;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0) return default_limit;
  return static_cast<int>(value);
}

void require_size(const char* routine, int n, int default_limit) {
  const int limit = soft_limit(default_limit);
  if (n > limit) {
    throw SizeLimitExceeded(std::string(routine) + ": " + std::to_string(n) +
                            " vertices exceeds the limit of " + std::to_string(limit) +
                            " (set DWIDTH_MAX_N to override)");
  }
}

}  // namespace dwidth
