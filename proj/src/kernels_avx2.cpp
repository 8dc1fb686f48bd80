#include "vspin/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#if defined(__clang__) || defined(__GNUC__)
#define VSPIN_TARGET_AVX2 __attribute__((__target__("avx2")))
#else
#define VSPIN_TARGET_AVX2
#endif

namespace vspin::kernels {

// Two interleaved complex numbers per ymm register. Per product term:
// mul, mul, addsub — the same rounding sequence as the scalar kernel (no
// FMA; "avx2" alone does not enable it), so results are bit-identical.
void VSPIN_TARGET_AVX2 matmul_avx2(const double* a, const double* b, double* out) {
  for (int i = 0; i < 4; ++i) {
    __m256d acc_lo = _mm256_setzero_pd();  // columns 0,1
    __m256d acc_hi = _mm256_setzero_pd();  // columns 2,3
    for (int k = 0; k < 4; ++k) {
      const __m256d ar = _mm256_set1_pd(a[2 * (4 * i + k)]);
      const __m256d ai = _mm256_set1_pd(a[2 * (4 * i + k) + 1]);
      const __m256d b_lo = _mm256_loadu_pd(b + 2 * (4 * k));
      const __m256d b_hi = _mm256_loadu_pd(b + 2 * (4 * k) + 4);
      // [bi, br] per pair, for the cross terms
      const __m256d bs_lo = _mm256_permute_pd(b_lo, 0x5);
      const __m256d bs_hi = _mm256_permute_pd(b_hi, 0x5);
      // even lane: ar*br - ai*bi, odd lane: ar*bi + ai*br
      acc_lo = _mm256_add_pd(
          acc_lo, _mm256_addsub_pd(_mm256_mul_pd(ar, b_lo), _mm256_mul_pd(ai, bs_lo)));
      acc_hi = _mm256_add_pd(
          acc_hi, _mm256_addsub_pd(_mm256_mul_pd(ar, b_hi), _mm256_mul_pd(ai, bs_hi)));
    }
    _mm256_storeu_pd(out + 8 * i, acc_lo);
    _mm256_storeu_pd(out + 8 * i + 4, acc_hi);
  }
}

}  // namespace vspin::kernels

#endif  // x86
