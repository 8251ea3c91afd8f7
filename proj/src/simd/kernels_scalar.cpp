#include "rhh/simd.hpp"

#include <cstdint>

namespace rhh::simd {
namespace {

void axpy_scalar(Residue* dst, const Residue* src, std::size_t n, Residue c, Residue p, double) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<Residue>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
  }
}

void scale_scalar(Residue* dst, std::size_t n, Residue c, Residue p, double) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<Residue>((static_cast<std::uint64_t>(c) * dst[i]) % p);
  }
}

}  // namespace

const ModKernels& scalar_kernels() {
  static const ModKernels k{"scalar", &axpy_scalar, &scale_scalar};
  return k;
}

}  // namespace rhh::simd
