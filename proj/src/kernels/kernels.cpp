#include "fracosc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace fracosc::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("FRACOSC_ISA")) {
    const std::string_view s(env);
    if (s == "scalar") return Isa::scalar;
    if (s == "avx2" && cpu_has_avx2()) return Isa::avx2;
    // anything else (including "auto") falls through to detection
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& slot() {
  static std::atomic<Isa> s{initial_isa()};
  return s;
}

}  // namespace

const char* name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

bool supported(Isa isa) {
  return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
}

Isa detect_best() { return initial_isa(); }

Isa active() { return slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (!supported(isa)) {
    throw std::invalid_argument(std::string("kernel ISA not supported here: ") +
                                name(isa));
  }
  slot().store(isa, std::memory_order_relaxed);
}

void tri_corr(std::span<const double> w, std::span<const double> y,
              std::span<double> out) {
  const std::size_t m = y.size();
  if (w.size() < m || out.size() != m) {
    throw std::invalid_argument("tri_corr: inconsistent span lengths");
  }
  if (m == 0) return;
#if defined(__x86_64__) || defined(_M_X64)
  if (active() == Isa::avx2) {
    detail::tri_corr_avx2(w.data(), y.data(), out.data(), m);
    return;
  }
#endif
  detail::tri_corr_scalar(w.data(), y.data(), out.data(), m);
}

}  // namespace fracosc::kernels
