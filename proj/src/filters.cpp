#include "sps/filters.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sps/bspline.hpp"

namespace sps {

DigitalFilter trim(const DigitalFilter& f) {
  int a = 0;
  int b = f.size();
  while (a < b && f.taps[a] == 0.0) ++a;
  while (b > a && f.taps[b - 1] == 0.0) --b;
  if (a == b) return {{0.0}, 0};
  DigitalFilter out;
  out.taps.assign(f.taps.begin() + a, f.taps.begin() + b);
  out.offset = f.offset + a;
  return out;
}

DigitalFilter convolve(const DigitalFilter& a, const DigitalFilter& b) {
  DigitalFilter out;
  out.offset = a.offset + b.offset;
  out.taps.assign(a.taps.size() + b.taps.size() - 1, 0.0);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) out.taps[i + j] += a.taps[i] * b.taps[j];
  return out;
}

DigitalFilter reverse(const DigitalFilter& f) {
  DigitalFilter out;
  out.taps.assign(f.taps.rbegin(), f.taps.rend());
  out.offset = -f.hi();
  return out;
}

DigitalFilter fd_filter(int n0) {
  if (n0 < 1) throw std::invalid_argument("fd_filter: order must be >= 1");
  std::vector<double> t(n0 + 1);
  t[0] = 1.0;
  for (int j = 1; j <= n0; ++j)
    t[j] = -t[j - 1] * static_cast<double>(n0 - j + 1) / static_cast<double>(j);
  return {std::move(t), 0};
}

DigitalFilter sampled_kernel(int n0) {
  if (n0 < 1) throw std::invalid_argument("sampled_kernel: order must be >= 1");
  PiecewisePoly beta = centered_bspline(2 * n0);
  DigitalFilter b;
  b.offset = -(n0 - 1);
  for (int k = -(n0 - 1); k <= n0 - 1; ++k) b.taps.push_back(beta.eval(k));
  return trim(b);
}

DigitalFilter spectral_factor(const DigitalFilter& sym) {
  const int len = sym.size();
  if (len % 2 == 0) throw std::invalid_argument("spectral_factor: even length");
  const int half = (len - 1) / 2;
  if (sym.offset != -half)
    throw std::invalid_argument("spectral_factor: filter not centered at zero");
  for (int k = 0; k <= half; ++k)
    if (std::fabs(sym.taps[half + k] - sym.taps[half - k]) >
        1e-12 * std::fabs(sym.taps[half]))
      throw std::invalid_argument("spectral_factor: filter not symmetric");

  if (half == 0) {
    if (sym.taps[0] <= 0.0)
      throw std::runtime_error("spectral_factor: not positive");
    return {{std::sqrt(sym.taps[0])}, 0};
  }

  // Zeros of sum_k sym[k] z^(k+half) come in (z, 1/z) pairs; the factor is
  // assembled from the pair members outside the unit circle.
  const int deg = 2 * half;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i)
    companion(i, deg - 1) = -sym.taps[i] / sym.taps[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);

  std::vector<std::complex<double>> outside;
  for (int i = 0; i < deg; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    double m = std::abs(z);
    if (std::fabs(m - 1.0) < 1e-8)
      throw std::runtime_error("spectral_factor: zero on the unit circle");
    if (m > 1.0) outside.push_back(z);
  }
  if (static_cast<int>(outside.size()) != half)
    throw std::runtime_error("spectral_factor: unbalanced zero pairing");

  // Expand prod_k (1 - w_k t) over t = z^(-1).
  std::vector<std::complex<double>> q(1, 1.0);
  for (const auto& w : outside) {
    q.push_back(0.0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 1; --i) q[i] -= w * q[i - 1];
  }
  double scale2 = sym.taps[deg] / q[half].real();
  if (!(scale2 > 0.0) || std::fabs(q[half].imag()) > 1e-9 * std::abs(q[half]))
    throw std::runtime_error("spectral_factor: not factorizable");
  double c = std::sqrt(scale2);

  DigitalFilter f;
  f.offset = 0;
  for (const auto& v : q) f.taps.push_back(c * v.real());
  if (f.taps[0] < 0.0)
    for (auto& t : f.taps) t = -t;

  DigitalFilter check = convolve(f, reverse(f));
  for (int k = -half; k <= half; ++k)
    if (std::fabs(check.at(k) - sym.at(k)) > 1e-10 * std::max(1.0, std::fabs(sym.taps[half])))
      throw std::runtime_error("spectral_factor: residual check failed");
  return f;
}

DigitalFilter autocorrelation_filter(int n0) {
  DigitalFilter d = fd_filter(n0);
  return trim(convolve(convolve(d, reverse(d)), sampled_kernel(n0)));
}

DigitalFilter autocorrelation_factor(int n0) {
  return trim(convolve(spectral_factor(sampled_kernel(n0)), fd_filter(n0)));
}

}  // namespace sps
