#include "airystable/rng.hpp"

#include <cstdlib>
#include <thread>

namespace airystable {

int mc_worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("AIRYSTABLE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace airystable
