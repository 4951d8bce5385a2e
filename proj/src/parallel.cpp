#include "skqaoa/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace skqaoa {

int worker_threads() {
  if (const char* env = std::getenv("SKQAOA_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace skqaoa
