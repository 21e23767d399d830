#include "sps/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "sps/kernels.hpp"

namespace sps {

void matvec(const Mat& A, const Vec& x, Vec& y) {
  if (static_cast<int>(x.size()) != A.cols)
    throw std::invalid_argument("matvec: size mismatch");
  y.assign(A.rows, 0.0);
  const auto& k = kern::ops();
  for (int i = 0; i < A.rows; ++i)
    y[i] = k.dot(A.row(i), x.data(), A.cols);
}

void matvec_t(const Mat& A, const Vec& x, Vec& y) {
  if (static_cast<int>(x.size()) != A.rows)
    throw std::invalid_argument("matvec_t: size mismatch");
  y.assign(A.cols, 0.0);
  const auto& k = kern::ops();
  for (int i = 0; i < A.rows; ++i)
    k.axpy(A.cols, x[i], A.row(i), y.data());
}

void add_ata(Mat& C, const Mat& A, double s) {
  if (C.rows != A.cols || C.cols != A.cols)
    throw std::invalid_argument("add_ata: size mismatch");
  const auto& k = kern::ops();
  for (int m = 0; m < A.rows; ++m) {
    const double* r = A.row(m);
    for (int i = 0; i < A.cols; ++i) {
      double w = s * r[i];
      if (w != 0.0) k.axpy(A.cols, w, r, C.row(i));
    }
  }
}

double norm2(const Vec& x) { return std::sqrt(kern::ops().nrm2sq(x.data(), x.size())); }

double norm1(const Vec& x) { return kern::ops().asum(x.data(), x.size()); }

double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  return kern::ops().dot(x.data(), y.data(), x.size());
}

Cholesky::Cholesky(const Mat& A) : n_(A.rows), lower_(A.rows, A.rows), upper_(A.rows, A.rows) {
  if (A.rows != A.cols) throw std::invalid_argument("cholesky: matrix not square");
  const auto& k = kern::ops();
  Mat& L = lower_;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = A(i, j) - k.dot(L.row(i), L.row(j), j);
      if (i == j) {
        if (s <= 0.0) throw std::runtime_error("cholesky: matrix not positive definite");
        L(i, i) = std::sqrt(s);
      } else {
        L(i, j) = s / L(j, j);
      }
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j) upper_(j, i) = L(i, j);
}

Vec Cholesky::solve(const Vec& b) const {
  if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("cholesky: rhs size mismatch");
  const auto& k = kern::ops();
  Vec x = b;
  // L z = b
  for (int i = 0; i < n_; ++i)
    x[i] = (x[i] - k.dot(lower_.row(i), x.data(), i)) / lower_(i, i);
  // L^T x = z, with L^T rows stored contiguously in upper_
  for (int i = n_ - 1; i >= 0; --i) {
    const double* r = upper_.row(i);
    x[i] = (x[i] - k.dot(r + i + 1, x.data() + i + 1, n_ - i - 1)) / r[i];
  }
  return x;
}

}  // namespace sps
