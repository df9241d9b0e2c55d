#include <immintrin.h>

#include "fracosc/kernels.hpp"

namespace fracosc::kernels::detail {

// Four outputs per block, one output per lane. At step k lane l adds
// w[k]*y[j+l+k], i.e. a broadcast of w[k] against an unaligned load of
// y[j+k..j+k+3]. Each lane therefore performs the same multiply-then-add
// sequence in the same ascending-k order as tri_corr_scalar; separate
// mul/add (no FMA) keeps the rounding identical, so results match the
// scalar kernel bit for bit. The ragged triangle tail (lanes 0..2 reach
// further than lane 3) is finished in scalar, still in ascending k.
void tri_corr_avx2(const double* w, const double* y, double* out,
                   std::size_t m) {
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    const std::size_t common = m - (j + 3);  // shortest lane length
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k < common; ++k) {
      const __m256d wv = _mm256_set1_pd(w[k]);
      const __m256d yv = _mm256_loadu_pd(y + j + k);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(wv, yv));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (std::size_t l = 0; l < 4; ++l) {
      const std::size_t len = m - (j + l);
      double a = lane[l];
      for (std::size_t kk = k; kk < len; ++kk) {
        a += w[kk] * y[j + l + kk];
      }
      out[j + l] = a;
    }
  }
  for (; j < m; ++j) {
    const std::size_t len = m - j;
    double acc = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      acc += w[k] * y[j + k];
    }
    out[j] = acc;
  }
}

}  // namespace fracosc::kernels::detail
