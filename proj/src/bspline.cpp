#include "sps/bspline.hpp"

#include <cmath>
#include <stdexcept>

namespace sps {

namespace {

double poly_eval(const std::vector<double>& c, double u) {
  double v = 0.0;
  for (int p = static_cast<int>(c.size()) - 1; p >= 0; --p) v = v * u + c[p];
  return v;
}

// Antiderivative from 0: A(u) = sum_p c[p] u^(p+1) / (p+1).
std::vector<double> poly_antiderivative(const std::vector<double>& c) {
  std::vector<double> a(c.size() + 1, 0.0);
  for (std::size_t p = 0; p < c.size(); ++p) a[p + 1] = c[p] / static_cast<double>(p + 1);
  return a;
}

}  // namespace

int PiecewisePoly::degree() const {
  int d = 0;
  for (const auto& p : pieces)
    d = std::max(d, static_cast<int>(p.size()) - 1);
  return d;
}

double PiecewisePoly::eval(double x) const {
  double f = std::floor(x);
  int i = static_cast<int>(f) - first_break;
  if (i < 0 || i >= static_cast<int>(pieces.size())) return 0.0;
  return poly_eval(pieces[i], x - f);
}

PiecewisePoly PiecewisePoly::derivative() const {
  PiecewisePoly d;
  d.first_break = first_break;
  d.pieces.reserve(pieces.size());
  for (const auto& c : pieces) {
    std::vector<double> dc;
    for (std::size_t p = 1; p < c.size(); ++p) dc.push_back(c[p] * static_cast<double>(p));
    if (dc.empty()) dc.push_back(0.0);
    d.pieces.push_back(std::move(dc));
  }
  return d;
}

PiecewisePoly PiecewisePoly::convolve_with_box() const {
  // (f * box)(k + u) = A_k(u) + A_{k-1}(1) - A_{k-1}(u), with A_j the
  // antiderivative of piece j from its left break. Support grows by one.
  PiecewisePoly out;
  out.first_break = first_break;
  int n = static_cast<int>(pieces.size());
  std::vector<std::vector<double>> anti(n);
  for (int j = 0; j < n; ++j) anti[j] = poly_antiderivative(pieces[j]);
  for (int k = 0; k <= n; ++k) {
    std::size_t deg = 1;
    if (k < n) deg = std::max(deg, anti[k].size());
    if (k > 0) deg = std::max(deg, anti[k - 1].size());
    std::vector<double> c(deg, 0.0);
    if (k < n)
      for (std::size_t p = 0; p < anti[k].size(); ++p) c[p] += anti[k][p];
    if (k > 0) {
      c[0] += poly_eval(anti[k - 1], 1.0);
      for (std::size_t p = 0; p < anti[k - 1].size(); ++p) c[p] -= anti[k - 1][p];
    }
    out.pieces.push_back(std::move(c));
  }
  return out;
}

PiecewisePoly bspline(int order) {
  if (order < 1) throw std::invalid_argument("bspline: order must be >= 1");
  PiecewisePoly b;
  b.first_break = 0;
  b.pieces = {{1.0}};
  for (int n = 1; n < order; ++n) b = b.convolve_with_box();
  return b;
}

PiecewisePoly centered_bspline(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("centered_bspline: order must be even and >= 2");
  PiecewisePoly b = bspline(order);
  b.first_break -= order / 2;
  return b;
}

double greens_function(int n0, double x) {
  if (n0 < 1) throw std::invalid_argument("greens_function: order must be >= 1");
  if (x <= 0.0) return 0.0;
  double v = 1.0;
  for (int k = 1; k < n0; ++k) v *= x / static_cast<double>(k);
  return v;
}

}  // namespace sps
