#pragma once

#include "sps/linalg.hpp"

namespace sps {

// Finite-difference analysis operator for the sparse component: row r of
// the result picks out the jump amplitude produced between grid nodes,
// i.e. (d * c)[r + 1] for the n01-th order difference d. Shape
// (T - 1) x (T + n01 - 1).
Mat sparse_reg_matrix(int T, int n01);

// Analysis factor of the smooth penalty Gram matrix: row n - 1 holds
// (g * c~)[n] for n = 1 .. T + 2*(n02 - 1) - 1, where c~ extends c with
// zero innovations and g is the causal autocorrelation factor. Satisfies
// |smooth_reg_matrix c|^2 = <c, rho * c~> exactly. Shape
// (N2 - 1) x N2 with N2 = T + 2*n02 - 1.
Mat smooth_reg_matrix(int T, int n02);

// The shared polynomial null space is pinned by zeroing the first `count`
// coefficients of one component: component 1 when n01 <= n02, else
// component 2; count = min(n01, n02).
struct BoundaryConstraint {
  int component = 1;
  int count = 0;
};

BoundaryConstraint boundary_constraint(int n01, int n02);

// Column elimination for the pinned coefficients and its inverse.
Mat drop_leading_columns(const Mat& A, int count);
Vec pad_leading_zeros(const Vec& x, int count);

}  // namespace sps
