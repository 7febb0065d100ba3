#include <cstdlib>

#include "monotone/kernels.hpp"

namespace monotone::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return avx2::table() != nullptr && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table& active() {
  static const Table& chosen = [] () -> const Table& {
    if (std::getenv("MONOTONE_FORCE_SCALAR") == nullptr && avx2_available()) return *avx2::table();
    return scalar::table();
  }();
  return chosen;
}

}  // namespace monotone::kernels
