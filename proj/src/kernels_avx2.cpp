#include "kernels_avx2.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cassert>

// AVX2 variants. Kept to plain mul/sub/add/max so every lane performs the
// exact operation sequence of the scalar kernels; the only reordering is the
// max reduction, which is rounding-free.

namespace efpm::kernels {

void scale_row_avx2(double scale, const double* q, double* out, std::size_t n) {
  const __m256d s = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(s, _mm256_loadu_pd(q + i)));
  }
  for (; i < n; ++i) out[i] = scale * q[i];
}

double best_surplus_avx2(double scale, const double* q, const double* p,
                         std::size_t n) {
  assert(n >= 1);
  if (n < 4) {
    double best = scale * q[0] - p[0];
    for (std::size_t i = 1; i < n; ++i) best = std::max(best, scale * q[i] - p[i]);
    return best;
  }
  const __m256d s = _mm256_set1_pd(scale);
  __m256d acc =
      _mm256_sub_pd(_mm256_mul_pd(s, _mm256_loadu_pd(q)), _mm256_loadu_pd(p));
  std::size_t i = 4;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_sub_pd(_mm256_mul_pd(s, _mm256_loadu_pd(q + i)),
                                    _mm256_loadu_pd(p + i));
    acc = _mm256_max_pd(acc, t);
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d m2 = _mm_max_pd(lo, hi);
  double best = std::max(_mm_cvtsd_f64(m2), _mm_cvtsd_f64(_mm_unpackhi_pd(m2, m2)));
  for (; i < n; ++i) best = std::max(best, scale * q[i] - p[i]);
  return best;
}

bool monge_rows_ok_avx2(const double* hi, const double* lo, std::size_t n,
                        double tol) {
  if (n < 2) return true;
  const std::size_t pairs = n - 1;
  const __m256d tolv = _mm256_set1_pd(tol);
  std::size_t k = 0;
  for (; k + 4 <= pairs; k += 4) {
    const __m256d lhs =
        _mm256_add_pd(_mm256_loadu_pd(hi + k), _mm256_loadu_pd(lo + k + 1));
    const __m256d rhs = _mm256_sub_pd(
        _mm256_add_pd(_mm256_loadu_pd(hi + k + 1), _mm256_loadu_pd(lo + k)), tolv);
    if (_mm256_movemask_pd(_mm256_cmp_pd(lhs, rhs, _CMP_LT_OQ)) != 0) return false;
  }
  for (; k < pairs; ++k) {
    if (hi[k] + lo[k + 1] < hi[k + 1] + lo[k] - tol) return false;
  }
  return true;
}

}  // namespace efpm::kernels
