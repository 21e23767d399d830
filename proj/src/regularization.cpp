#include "sps/regularization.hpp"

#include <stdexcept>

#include "sps/filters.hpp"

namespace sps {

Mat sparse_reg_matrix(int T, int n01) {
  if (T < 2) throw std::invalid_argument("sparse_reg_matrix: T must be >= 2");
  DigitalFilter d = fd_filter(n01);
  const int d1 = n01 + 1;
  const int n1 = T + d1 - 2;
  Mat L(T - 1, n1);
  for (int r = 0; r < T - 1; ++r)
    for (int j = 0; j < d1; ++j) L(r, r + j) = d.taps[d1 - 1 - j];
  return L;
}

Mat smooth_reg_matrix(int T, int n02) {
  if (T < 2) throw std::invalid_argument("smooth_reg_matrix: T must be >= 2");
  DigitalFilter d = fd_filter(n02);
  DigitalFilter bh = spectral_factor(sampled_kernel(n02));
  const int d2 = n02 + 1;
  const int b2 = n02;  // taps in the spectral factor
  const int m2 = 2 - d2;
  const int mm2 = T + d2 - 2;
  const int n2 = T + 2 * d2 - 3;
  Mat L(mm2 + b2 - 1, n2);
  // Row n-1 accumulates (bh * d * c~)[n]; the zero-innovation extension
  // means only source indices j with 1 <= j <= mm2 contribute.
  for (int n = 1; n <= mm2 + b2 - 1; ++n)
    for (int k = 0; k < b2; ++k) {
      int j = n - k;
      if (j < 1 || j > mm2) continue;
      for (int i = 0; i < d2; ++i) L(n - 1, j - i - m2) += bh.taps[k] * d.taps[i];
    }
  return L;
}

BoundaryConstraint boundary_constraint(int n01, int n02) {
  if (n01 < 1 || n02 < 1)
    throw std::invalid_argument("boundary_constraint: orders must be >= 1");
  BoundaryConstraint bc;
  bc.component = (n01 <= n02) ? 1 : 2;
  bc.count = std::min(n01, n02);
  return bc;
}

Mat drop_leading_columns(const Mat& A, int count) {
  if (count < 0 || count >= A.cols)
    throw std::invalid_argument("drop_leading_columns: bad count");
  Mat B(A.rows, A.cols - count);
  for (int i = 0; i < A.rows; ++i)
    for (int j = count; j < A.cols; ++j) B(i, j - count) = A(i, j);
  return B;
}

Vec pad_leading_zeros(const Vec& x, int count) {
  Vec y(x.size() + count, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) y[count + i] = x[i];
  return y;
}

}  // namespace sps
