// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "nilmassey/simd/kernels.hpp"

namespace nilmassey::simd::detail {
namespace {

// Reduce eight nonnegative lanes v < 2^30 modulo m. The quotient estimate
// from a double reciprocal is off by at most one in either direction.
inline __m256i reduce_lanes(__m256i v, __m256d inv_m, __m256i vm) {
  __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(v));
  __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(v, 1));
  __m128i qlo = _mm256_cvttpd_epi32(_mm256_mul_pd(lo, inv_m));
  __m128i qhi = _mm256_cvttpd_epi32(_mm256_mul_pd(hi, inv_m));
  __m256i q = _mm256_inserti128_si256(_mm256_castsi128_si256(qlo), qhi, 1);
  __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, vm));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vm));
  __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vm, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(big, vm));
}

void axpy_mod_avx2(uint32_t* y, const uint32_t* x, std::size_t len, uint32_t c, uint32_t m) {
  if (m > kVectorModulusLimit) return kScalarTable.axpy_mod(y, x, len, c, m);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256d inv_m = _mm256_set1_pd(1.0 / m);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i s = _mm256_add_epi32(vy, _mm256_mullo_epi32(vx, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_lanes(s, inv_m, vm));
  }
  if (i < len) kScalarTable.axpy_mod(y + i, x + i, len - i, c, m);
}

void add_mod_avx2(uint32_t* y, const uint32_t* x, std::size_t len, uint32_t m) {
  if (m > kVectorModulusLimit) return kScalarTable.add_mod(y, x, len, m);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i vm1 = _mm256_set1_epi32(static_cast<int>(m - 1));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i s = _mm256_add_epi32(vx, vy);
    __m256i big = _mm256_cmpgt_epi32(s, vm1);
    s = _mm256_sub_epi32(s, _mm256_and_si256(big, vm));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), s);
  }
  if (i < len) kScalarTable.add_mod(y + i, x + i, len - i, m);
}

void scale_mod_avx2(uint32_t* y, std::size_t len, uint32_t c, uint32_t m) {
  if (m > kVectorModulusLimit) return kScalarTable.scale_mod(y, len, c, m);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256d inv_m = _mm256_set1_pd(1.0 / m);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i p = _mm256_mullo_epi32(vy, vc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_lanes(p, inv_m, vm));
  }
  if (i < len) kScalarTable.scale_mod(y + i, len - i, c, m);
}

}  // namespace

const KernelTable kAvx2Table{"avx2", &axpy_mod_avx2, &add_mod_avx2, &scale_mod_avx2};

}  // namespace nilmassey::simd::detail
