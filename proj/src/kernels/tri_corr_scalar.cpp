#include "fracosc/kernels.hpp"

namespace fracosc::kernels::detail {

// Reference kernel. The ascending-k accumulation order is the contract the
// SIMD variants must reproduce exactly.
void tri_corr_scalar(const double* w, const double* y, double* out,
                     std::size_t m) {
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t len = m - j;
    double acc = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      acc += w[k] * y[j + k];
    }
    out[j] = acc;
  }
}

}  // namespace fracosc::kernels::detail
