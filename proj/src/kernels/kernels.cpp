#include "sps/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace sps::kern {

// ============================ scalar reference ============================

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(std::size_t n, double a, double* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double nrm2sq_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double asum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

void soft_threshold_scalar(std::size_t n, const double* x, double t, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    double m = std::fabs(x[i]) - t;
    y[i] = m > 0.0 ? (x[i] > 0.0 ? m : -m) : 0.0;
  }
}

constexpr Ops scalar_ops = {dot_scalar, axpy_scalar, scal_scalar,
                            nrm2sq_scalar, asum_scalar, soft_threshold_scalar};

}  // namespace

// ============================ dispatch ============================

#if defined(__x86_64__) || defined(_M_X64)
namespace detail {
extern const Ops avx2_ops;  // kernels_avx2.cpp
}
static bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
#endif

#if defined(__aarch64__)
namespace detail {
extern const Ops neon_ops;  // kernels_neon.cpp
}
#endif

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return cpu_has_avx2();
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Ops& ops(Backend b) {
  switch (b) {
    case Backend::scalar:
      return scalar_ops;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (cpu_has_avx2()) return detail::avx2_ops;
#endif
      break;
    case Backend::neon:
#if defined(__aarch64__)
      return detail::neon_ops;
#endif
      break;
  }
  throw std::runtime_error("kernel backend not supported on this machine");
}

namespace {

Backend pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) return Backend::avx2;
#elif defined(__aarch64__)
  return Backend::neon;
#endif
  return Backend::scalar;
}

Backend g_active = pick_default();

}  // namespace

const Ops& ops() { return ops(g_active); }

Backend active_backend() { return g_active; }

bool set_backend(Backend b) {
  if (!backend_supported(b)) return false;
  g_active = b;
  return true;
}

}  // namespace sps::kern
