#include "pauli/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pauli {

unsigned default_thread_count() {
  if (const char* env = std::getenv("PAULI_NECKLACE_THREADS")) {
    try {
      long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace pauli
