#pragma once

// Independent reference implementations used only by tests. These must not
// share numerical code paths with the library: B-splines come from the
// pointwise two-term recursion, integrals from composite Gauss-Legendre
// quadrature with locally generated nodes, linear solves from Gauss-Jordan
// elimination, and the l1 solver is a primal-dual scheme rather than ADMM.

#include <functional>
#include <vector>

#include "sps/admm.hpp"
#include "sps/linalg.hpp"

namespace oracle {

using sps::Mat;
using sps::Vec;

// Causal B-spline of order n (degree n-1) by the two-term recursion
// beta_1 = 1_[0,1), beta_n(x) = (x beta_{n-1}(x) + (n - x) beta_{n-1}(x-1)) / (n-1).
double bspline_recursive(int order, double x);

// Gauss-Legendre nodes and weights on [-1, 1].
void gl_rule(int n, Vec& nodes, Vec& weights);

// Composite quadrature of f over [a, b]: the interval is cut at the
// integers it contains and each cell gets an n-node rule.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int nodes_per_cell);

// Coefficient sequence c (c[i] at integer index c_lo + i) extended in both
// directions so that the order-n0 finite difference of the extension
// vanishes at every lag it does not fully determine, i.e. the spline it
// generates continues polynomially. `pad` extra values are produced on
// each side.
struct Extension {
  Vec values;
  int lo = 0;

  double at(int k) const {
    int i = k - lo;
    if (i < 0 || i >= static_cast<int>(values.size())) return 0.0;
    return values[i];
  }
};
Extension extend_zero_innovation(const Vec& c, int c_lo, int n0, int pad);

// Spline x -> sum_k ext(k) beta_n0(x - k) through the recursion above.
double eval_extended_spline(const Extension& ext, int n0, double x);

// Local polynomial of a piecewise-polynomial function on (k, k+1):
// coefficients of u^p, u = x - k, recovered by interpolation at interior
// points. degree is the polynomial degree of the pieces.
Vec local_poly(const std::function<double(double)>& f, int k, int degree);

// Total variation of the (n0-1)-th derivative of the spline generated by
// the zero-innovation extension of c: the sum over integer breakpoints of
// the jumps of the leading local-polynomial coefficient times (n0-1)!.
double gtv(const Vec& c, int c_lo, int n0);

// Integral over the real line of the squared n0-th derivative of the
// spline of order 2*n0 generated by the zero-innovation extension of c.
double gtik(const Vec& c, int c_lo, int n0);

// Gauss-Jordan inverse with partial pivoting.
Mat gauss_inverse(const Mat& A);

// Solves A x = b with the inverse above.
Vec gauss_solve(const Mat& A, const Vec& b);

// Numerical rank by elimination with full pivoting.
int rank_of(Mat A, double tol);

// Primal-dual (Chambolle-Pock) solver for the composite objective; an
// independent check of the ADMM path. Returns coefficients with the
// boundary zeros reinserted.
struct PdhgResult {
  Vec c1, c2;
  double objective = 0.0;
  int iterations = 0;
};
PdhgResult pdhg_composite(const sps::CompositeProblem& p, int max_iter);

// Largest violation of the first-order optimality conditions at (c1, c2):
// the gradient residual of the smooth block, the subgradient residual of
// the l1 block (best dual certificate fitted by least squares), and the
// dual box overflow scaled by lambda1, all in absolute units.
double kkt_violation(const sps::CompositeProblem& p, const Vec& c1,
                     const Vec& c2);

}  // namespace oracle
