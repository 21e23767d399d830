#pragma once

#include <cstdint>

#include "sps/linalg.hpp"
#include "sps/measurement.hpp"

namespace sps {

// Piecewise power-law part: jumps of the (n01-1)-th derivative at the
// listed knots, evaluated through the one-sided power kernel. The
// polynomial null-space part is identically zero so that the boundary
// conditions of the reconstruction match the generator.
struct SparseSignal {
  std::vector<double> knots;
  std::vector<double> amps;
  int n01 = 1;

  double eval(double t) const;
};

// Smooth stochastic part sampled on a fine uniform grid: samples[j] is the
// value at t = j * step, with samples[0] = 0.
struct SmoothSignal {
  Vec samples;
  double step = 0.0;

  double eval(double t) const;  // linear interpolation between samples
};

struct GroundTruth {
  SparseSignal sparse;
  SmoothSignal smooth;
};

// K knots uniform in (margin, 1 - margin), sorted; amplitudes N(0, sigma1^2).
SparseSignal make_sparse_gt(int k, double sigma1, int n01, double margin,
                            std::uint64_t seed);

// Anchored n02-fold cumulative integration of white increments
// N(0, sigma2^2 * step) on the fine grid; all integration constants zero.
SmoothSignal make_smooth_gt(double sigma2, int n02, double step,
                            std::uint64_t seed);

// Exact measurements of the sparse part (closed-form oscillatory integrals
// of the power pieces) and of the piecewise-linear interpolant of the
// smooth samples.
Vec measure_sparse(const SparseSignal& s, const MeasurementModel& model);
Vec measure_smooth(const SmoothSignal& s, const MeasurementModel& model);

// Additive white Gaussian noise rescaled so the realized snr is exact.
// snr >= 300 dB acts as the noiseless sentinel.
Vec add_noise(const Vec& clean, double snr_db, std::uint64_t seed);

// 20 log10(|ref| / |ref - rec|), capped at the 300 dB sentinel.
double snr_db(const Vec& ref, const Vec& rec);

}  // namespace sps
