#include <cstdlib>
#include <cstring>

#include "rhh/simd.hpp"

namespace rhh::simd {

#ifdef RHH_HAVE_AVX2
namespace detail {
const ModKernels& avx2_kernel_table();
}
#endif

const ModKernels* avx2_kernels() {
#ifdef RHH_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {
bool forced_scalar() {
  static const bool forced = [] {
    const char* v = std::getenv("RHH_SIMD");
    return v != nullptr && std::strcmp(v, "scalar") == 0;
  }();
  return forced;
}
}  // namespace

const ModKernels& kernels_for(std::uint32_t p) {
  if (!forced_scalar() && p < kVectorModulusLimit) {
    if (const ModKernels* k = avx2_kernels()) return *k;
  }
  return scalar_kernels();
}

}  // namespace rhh::simd
