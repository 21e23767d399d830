#pragma once

#include <cstddef>

// Low-level vector kernels used by the solvers and matrix assembly.
// A scalar reference implementation is always available; on x86-64 an AVX2
// variant and on aarch64 a NEON variant are selected at startup when the CPU
// supports them. The active backend can be forced, which the equivalence
// tests use to compare every variant against the scalar reference.

namespace sps::kern {

enum class Backend { scalar, avx2, neon };

struct Ops {
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(std::size_t n, double a, const double* x, double* y);
  // x[i] *= a
  void (*scal)(std::size_t n, double a, double* x);
  // sum_i x[i]^2
  double (*nrm2sq)(const double* x, std::size_t n);
  // sum_i |x[i]|
  double (*asum)(const double* x, std::size_t n);
  // y[i] = sign(x[i]) * max(|x[i]| - t, 0)
  void (*soft_threshold)(std::size_t n, const double* x, double t, double* y);
};

const char* backend_name(Backend b);

// True if the given backend can run on this machine.
bool backend_supported(Backend b);

// Kernel table for a specific backend. Throws if unsupported.
const Ops& ops(Backend b);

// Active kernel table (chosen at startup, or forced via set_backend).
const Ops& ops();

Backend active_backend();

// Force a backend; returns false (and leaves the active one unchanged)
// if this machine cannot run it.
bool set_backend(Backend b);

}  // namespace sps::kern
