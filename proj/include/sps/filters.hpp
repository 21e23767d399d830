#pragma once

#include <vector>

namespace sps {

// Finitely supported digital filter. Tap k lives at integer index
// offset + k, so taps.front() sits at `offset` and taps.back() at
// offset + size - 1. Canonical form has nonzero end taps.
struct DigitalFilter {
  std::vector<double> taps;
  int offset = 0;

  int size() const { return static_cast<int>(taps.size()); }
  int lo() const { return offset; }
  int hi() const { return offset + size() - 1; }

  // Value at integer index k, zero outside the support.
  double at(int k) const {
    int i = k - offset;
    if (i < 0 || i >= size()) return 0.0;
    return taps[i];
  }
};

// Strips exactly-zero end taps. An all-zero filter collapses to a single
// zero tap at index 0.
DigitalFilter trim(const DigitalFilter& f);

DigitalFilter convolve(const DigitalFilter& a, const DigitalFilter& b);

// Time reversal f[-k].
DigitalFilter reverse(const DigitalFilter& f);

// n0-th order finite difference: taps (-1)^j binom(n0, j) at indices 0..n0.
DigitalFilter fd_filter(int n0);

// Integer samples b[k] of the centered B-spline of order 2*n0,
// supported on |k| <= n0 - 1.
DigitalFilter sampled_kernel(int n0);

// Symmetric factorization s = f * reverse(f) of a symmetric, positive
// (on the unit circle) filter of odd length. Returns the causal factor f
// with f.offset = 0, normalized to a positive leading tap; its zeros lie
// outside the unit circle. Throws std::runtime_error when the input has
// unit-modulus zeros or is not factorizable.
DigitalFilter spectral_factor(const DigitalFilter& sym);

// rho = d * reverse(d) * b for the n0-th order finite difference d and
// sampled kernel b. Symmetric, support |k| <= 2*n0 - 1.
DigitalFilter autocorrelation_filter(int n0);

// g = spectral_factor(b) * d, the causal factor with rho = g * reverse(g).
DigitalFilter autocorrelation_factor(int n0);

}  // namespace sps
