#pragma once

#include <vector>

namespace sps {

// Piecewise polynomial with consecutive integer breakpoints. Piece i covers
// [first_break + i, first_break + i + 1) and is stored in the local
// coordinate u = x - (first_break + i), u in [0,1), as coefficients of u^p.
// Evaluates to zero outside [first_break, last_break()).
struct PiecewisePoly {
  int first_break = 0;
  std::vector<std::vector<double>> pieces;

  int last_break() const { return first_break + static_cast<int>(pieces.size()); }
  int degree() const;
  double eval(double x) const;
  PiecewisePoly derivative() const;
  // Running integral against the unit box, (f * box)(x) = int_{x-1}^x f.
  PiecewisePoly convolve_with_box() const;
};

// Causal polynomial B-spline of order n (degree n-1), supported on [0, n].
// Order 1 is the indicator of [0, 1).
PiecewisePoly bspline(int order);

// B-spline of even order centered at zero, supported on [-order/2, order/2].
PiecewisePoly centered_bspline(int order);

// One-sided power x_+^(n0-1) / (n0-1)!, the kernel whose n0-fold finite
// difference reproduces a unit jump in the (n0-1)-th derivative.
double greens_function(int n0, double x);

}  // namespace sps
