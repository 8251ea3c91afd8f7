#pragma once

// Row kernels for arithmetic mod p. A scalar reference implementation is always
// available; vector variants are chosen at runtime when the CPU supports them
// and the modulus fits their lane width. Every variant must produce
// bit-identical results (tests/test_simd.cpp).

#include <cstddef>
#include <string_view>

#include "rhh/field.hpp"

namespace rhh::simd {

struct ModKernels {
  const char* name;
  /// dst[i] = (dst[i] + c * src[i]) mod p, with every input a canonical residue.
  void (*axpy)(Residue* dst, const Residue* src, std::size_t n, Residue c, Residue p, double inv_p);
  /// dst[i] = (c * dst[i]) mod p
  void (*scale)(Residue* dst, std::size_t n, Residue c, Residue p, double inv_p);
};

const ModKernels& scalar_kernels();

/// nullptr unless the binary was built with the AVX2 variant and the CPU has AVX2.
const ModKernels* avx2_kernels();

/// Largest modulus the vector kernels accept (products must fit in 31 bits).
constexpr std::uint32_t kVectorModulusLimit = 1u << 15;

/// Kernel set used for modulus p. Honors RHH_SIMD=scalar in the environment.
const ModKernels& kernels_for(std::uint32_t p);

}  // namespace rhh::simd
