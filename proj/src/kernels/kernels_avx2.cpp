// AVX2 kernel variants. This translation unit is compiled with -mavx2; the
// dispatcher only routes here after runtime CPU detection. Results agree with
// the scalar reference under double equality on every input (infinities and
// ties included), and index results agree exactly.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <limits>

#include "bf/kernels.hpp"

namespace bf::kernels::avx2 {

double min_value(const double* x, std::size_t n) {
  std::size_t i = 0;
  double m = std::numeric_limits<double>::infinity();
  if (n >= 8) {
    __m256d acc0 = _mm256_set1_pd(m);
    __m256d acc1 = acc0;
    for (; i + 8 <= n; i += 8) {
      acc0 = _mm256_min_pd(acc0, _mm256_loadu_pd(x + i));
      acc1 = _mm256_min_pd(acc1, _mm256_loadu_pd(x + i + 4));
    }
    __m256d acc = _mm256_min_pd(acc0, acc1);
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d m2 = _mm_min_pd(lo, hi);
    __m128d m1 = _mm_min_sd(m2, _mm_unpackhi_pd(m2, m2));
    m = _mm_cvtsd_f64(m1);
  }
  for (; i < n; ++i)
    if (x[i] < m) m = x[i];
  return m;
}

std::size_t find_next_equal(const double* x, std::size_t n, std::size_t start,
                            double v) {
  std::size_t i = start;
  const __m256d needle = _mm256_set1_pd(v);
  for (; i + 4 <= n; i += 4) {
    __m256d eq = _mm256_cmp_pd(_mm256_loadu_pd(x + i), needle, _CMP_EQ_OQ);
    unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(eq));
    if (mask) return i + static_cast<std::size_t>(std::countr_zero(mask));
  }
  for (; i < n; ++i)
    if (x[i] == v) return i;
  return n;
}

void min_inplace(double* dst, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i,
                     _mm256_min_pd(_mm256_loadu_pd(dst + i), _mm256_loadu_pd(src + i)));
  for (; i < n; ++i)
    if (src[i] < dst[i]) dst[i] = src[i];
}

void sub_scalar(double* dst, const double* src, double c, std::size_t n) {
  std::size_t i = 0;
  const __m256d cc = _mm256_set1_pd(c);
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(src + i), cc));
  for (; i < n; ++i) dst[i] = src[i] - c;
}

}  // namespace bf::kernels::avx2

#endif  // x86-64
