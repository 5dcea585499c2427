#include "cyclocode/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cyclocode {

unsigned worker_count() {
  if (const char* env = std::getenv("CYCLOCODE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace cyclocode
