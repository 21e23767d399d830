#pragma once

#include <cstddef>
#include <vector>

namespace sps {

using Vec = std::vector<double>;

// Dense row-major matrix.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// y = A x
void matvec(const Mat& A, const Vec& x, Vec& y);

// y = A^T x
void matvec_t(const Mat& A, const Vec& x, Vec& y);

// C += s * A^T A, accumulated row by row. C must be A.cols x A.cols.
void add_ata(Mat& C, const Mat& A, double s);

// Euclidean norm, |x|_1, dot products through the kernel layer.
double norm2(const Vec& x);
double norm1(const Vec& x);
double dot(const Vec& x, const Vec& y);

// Cholesky factorization A = L L^T of a symmetric positive definite matrix.
// Keeps both L and L^T so that forward and backward substitution walk
// contiguous rows. Throws std::runtime_error if a pivot is not positive.
class Cholesky {
 public:
  explicit Cholesky(const Mat& A);

  // Solves A x = b.
  Vec solve(const Vec& b) const;

  int dim() const { return n_; }

 private:
  int n_;
  Mat lower_;
  Mat upper_;
};

}  // namespace sps
