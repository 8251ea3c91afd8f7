// AVX2 variants of the mod-p row kernels. Compiled with -mavx2 in isolation;
// only reached through the runtime dispatch in dispatch.cpp.

#include <immintrin.h>

#include <cstdint>

#include "rhh/simd.hpp"

namespace rhh::simd {
namespace detail {

namespace {

// Reduces eight lanes holding values in [0, 2^31) modulo p. The quotient is
// estimated in double precision and corrected by at most one step each way.
inline __m256i reduce8(__m256i x, __m256i vp, __m256d vinv) {
  __m128i lo = _mm256_castsi256_si128(x);
  __m128i hi = _mm256_extracti128_si256(x, 1);
  __m256d qlo = _mm256_floor_pd(_mm256_mul_pd(_mm256_cvtepi32_pd(lo), vinv));
  __m256d qhi = _mm256_floor_pd(_mm256_mul_pd(_mm256_cvtepi32_pd(hi), vinv));
  __m256i q = _mm256_set_m128i(_mm256_cvttpd_epi32(qhi), _mm256_cvttpd_epi32(qlo));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  // r in [-p, 2p)
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  __m256i pm1 = _mm256_sub_epi32(vp, _mm256_set1_epi32(1));
  __m256i big = _mm256_cmpgt_epi32(r, pm1);
  return _mm256_sub_epi32(r, _mm256_and_si256(big, vp));
}

void axpy_avx2(Residue* dst, const Residue* src, std::size_t n, Residue c, Residue p, double inv_p) {
  if (c == 0) return;
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256d vinv = _mm256_set1_pd(inv_p);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(x, vp, vinv));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<Residue>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
  }
}

void scale_avx2(Residue* dst, std::size_t n, Residue c, Residue p, double inv_p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256d vinv = _mm256_set1_pd(inv_p);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(_mm256_mullo_epi32(d, vc), vp, vinv));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<Residue>((static_cast<std::uint64_t>(c) * dst[i]) % p);
  }
}

}  // namespace

const ModKernels& avx2_kernel_table() {
  static const ModKernels k{"avx2", &axpy_avx2, &scale_avx2};
  return k;
}

}  // namespace detail
}  // namespace rhh::simd
