#include "toriclab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace toriclab {

std::size_t thread_limit() {
  if (const char *env = std::getenv("TORICLAB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0)
        return static_cast<std::size_t>(v);
    } catch (const std::exception &) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

} // namespace toriclab
