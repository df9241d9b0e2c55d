#pragma once

#include <cstddef>
#include <span>

namespace fracosc::kernels {

enum class Isa { scalar, avx2 };

const char* name(Isa isa);
bool supported(Isa isa);

/// Best ISA the current CPU supports, unless overridden by the
/// FRACOSC_ISA environment variable ("scalar" or "avx2").
Isa detect_best();
Isa active();
void set_active(Isa isa);  // throws std::invalid_argument if unsupported

/// Triangular correlation over the tail of y:
///   out[j] = sum_{k=0}^{m-1-j} w[k] * y[j+k],   j = 0..m-1,  m = y.size().
/// Every implementation accumulates each output in ascending k with plain
/// multiply-then-add, so all ISA variants produce bit-identical results.
void tri_corr(std::span<const double> w, std::span<const double> y,
              std::span<double> out);

namespace detail {
void tri_corr_scalar(const double* w, const double* y, double* out,
                     std::size_t m);
#if defined(__x86_64__) || defined(_M_X64)
void tri_corr_avx2(const double* w, const double* y, double* out,
                   std::size_t m);
#endif
}  // namespace detail

}  // namespace fracosc::kernels
