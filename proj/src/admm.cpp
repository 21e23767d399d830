#include "sps/admm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sps/kernels.hpp"

namespace sps {

namespace {

void add_ata_at(Mat& C, const Mat& A, double s, int off) {
  const auto& k = kern::ops();
  for (int m = 0; m < A.rows; ++m) {
    const double* r = A.row(m);
    for (int i = 0; i < A.cols; ++i) {
      double w = s * r[i];
      if (w != 0.0) k.axpy(A.cols, w, r, C.row(off + i) + off);
    }
  }
}

struct CoreResult {
  Vec x;
  int iterations = 0;
  bool converged = false;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

// ADMM for min 0.5 |A x - y|^2 + 0.5 x^T Q x + lambda1 |B xp|_1, where
// xp is the leading B.cols entries of x and Q is an optional quadratic
// term already assembled into `quad` (may have zero size).
CoreResult admm_core(const Mat& A, const Vec& y, const Mat& B,
                     const Mat& quad, double lambda1, const AdmmConfig& cfg,
                     const std::function<double(const Vec&)>& objective) {
  const int n = A.cols;
  const int nb = B.cols;
  const int np = B.rows;
  if (nb > n) throw std::invalid_argument("admm: l1 operator wider than unknowns");
  double mu = cfg.mu > 0.0 ? cfg.mu : lambda1;
  if (!(mu > 0.0)) throw std::invalid_argument("admm: penalty parameter must be positive");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 2.0))
    throw std::invalid_argument("admm: relaxation must lie in (0,2)");
  if (cfg.max_iter < 1) throw std::invalid_argument("admm: max_iter must be >= 1");

  const auto& k = kern::ops();

  Mat K(n, n);
  add_ata_at(K, A, 1.0, 0);
  if (quad.rows == n && quad.cols == n)
    for (std::size_t i = 0; i < K.a.size(); ++i) K.a[i] += quad.a[i];
  add_ata_at(K, B, mu, 0);
  Cholesky chol(K);

  Vec rhs0;
  matvec_t(A, y, rhs0);

  Vec z(np, 0.0), u(np, 0.0);
  if (cfg.random_init) {
    std::mt19937_64 rng(cfg.init_seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (auto& v : z) v = g(rng);
    for (auto& v : u) v = g(rng);
  }

  CoreResult res;
  Vec rhs(n), w(np), zu(np), bt(nb), zold(np);
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    // x-update through the cached factorization
    for (int i = 0; i < np; ++i) zu[i] = z[i] - u[i];
    matvec_t(B, zu, bt);
    rhs = rhs0;
    k.axpy(nb, mu, bt.data(), rhs.data());
    res.x = chol.solve(rhs);

    for (int i = 0; i < np; ++i) w[i] = k.dot(B.row(i), res.x.data(), nb);

    zold = z;
    // relaxed z-update and scaled dual ascent
    for (int i = 0; i < np; ++i) {
      double v = cfg.alpha * w[i] + (1.0 - cfg.alpha) * zold[i];
      zu[i] = v + u[i];
    }
    k.soft_threshold(np, zu.data(), lambda1 / mu, z.data());
    for (int i = 0; i < np; ++i)
      u[i] = zu[i] - z[i];

    double rnorm = 0.0, wn = 0.0, zn = 0.0;
    for (int i = 0; i < np; ++i) {
      double d = w[i] - z[i];
      rnorm += d * d;
    }
    rnorm = std::sqrt(rnorm);
    wn = norm2(w);
    zn = norm2(z);
    for (int i = 0; i < np; ++i) zu[i] = z[i] - zold[i];
    matvec_t(B, zu, bt);
    double snorm = mu * norm2(bt);
    matvec_t(B, u, bt);
    double dualscale = mu * norm2(bt);

    res.iterations = iter;
    res.primal_residual = rnorm;
    res.dual_residual = snorm;
    if (cfg.trace) cfg.trace(iter, objective(res.x));

    double eps_pri = std::sqrt(static_cast<double>(np)) * cfg.tol_abs +
                     cfg.tol_rel * std::max(wn, zn);
    double eps_dual = std::sqrt(static_cast<double>(nb)) * cfg.tol_abs +
                      cfg.tol_rel * dualscale;
    if (rnorm <= eps_pri && snorm <= eps_dual) {
      res.converged = true;
      break;
    }
  }
  return res;
}

Mat hcat(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("hcat: row mismatch");
  Mat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    double* r = C.row(i);
    const double* ra = A.row(i);
    const double* rb = B.row(i);
    for (int j = 0; j < A.cols; ++j) r[j] = ra[j];
    for (int j = 0; j < B.cols; ++j) r[A.cols + j] = rb[j];
  }
  return C;
}

}  // namespace

double composite_objective(const CompositeProblem& p, const Vec& c1, const Vec& c2) {
  Vec r1, r2, w;
  matvec(p.H1, c1, r1);
  matvec(p.H2, c2, r2);
  for (std::size_t i = 0; i < r1.size(); ++i) r1[i] += r2[i] - p.y[i];
  matvec(p.L1, c1, w);
  double j = 0.5 * kern::ops().nrm2sq(r1.data(), r1.size()) + p.lambda1 * norm1(w);
  matvec(p.L2, c2, w);
  return j + p.lambda2 * kern::ops().nrm2sq(w.data(), w.size());
}

double sparse_objective(const SparseProblem& p, const Vec& c) {
  Vec r, w;
  matvec(p.H, c, r);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p.y[i];
  matvec(p.L, c, w);
  return 0.5 * kern::ops().nrm2sq(r.data(), r.size()) + p.lambda * norm1(w);
}

double smooth_objective(const SmoothProblem& p, const Vec& c) {
  Vec r, w;
  matvec(p.H, c, r);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p.y[i];
  matvec(p.L, c, w);
  return 0.5 * kern::ops().nrm2sq(r.data(), r.size()) +
         p.lambda * kern::ops().nrm2sq(w.data(), w.size());
}

AdmmResult solve_composite(const CompositeProblem& p, const AdmmConfig& cfg) {
  if (p.H1.rows != p.H2.rows || static_cast<int>(p.y.size()) != p.H1.rows)
    throw std::invalid_argument("solve_composite: measurement size mismatch");
  const int nb1 = (p.boundary.component == 1) ? p.boundary.count : 0;
  const int nb2 = (p.boundary.component == 2) ? p.boundary.count : 0;
  Mat H1e = nb1 ? drop_leading_columns(p.H1, nb1) : p.H1;
  Mat L1e = nb1 ? drop_leading_columns(p.L1, nb1) : p.L1;
  Mat H2e = nb2 ? drop_leading_columns(p.H2, nb2) : p.H2;
  Mat L2e = nb2 ? drop_leading_columns(p.L2, nb2) : p.L2;

  const int n1 = H1e.cols;
  const int n2 = H2e.cols;
  Mat A = hcat(H1e, H2e);
  Mat quad(n1 + n2, n1 + n2);
  add_ata_at(quad, L2e, 2.0 * p.lambda2, n1);

  auto objective = [&](const Vec& x) {
    Vec c1(x.begin(), x.begin() + n1);
    Vec c2(x.begin() + n1, x.end());
    return composite_objective(p, pad_leading_zeros(c1, nb1), pad_leading_zeros(c2, nb2));
  };

  CoreResult core = admm_core(A, p.y, L1e, quad, p.lambda1, cfg, objective);

  AdmmResult out;
  out.c1 = pad_leading_zeros(Vec(core.x.begin(), core.x.begin() + n1), nb1);
  out.c2 = pad_leading_zeros(Vec(core.x.begin() + n1, core.x.end()), nb2);
  out.iterations = core.iterations;
  out.converged = core.converged;
  out.primal_residual = core.primal_residual;
  out.dual_residual = core.dual_residual;
  out.objective = composite_objective(p, out.c1, out.c2);
  return out;
}

AdmmResult solve_sparse_only(const SparseProblem& p, const AdmmConfig& cfg) {
  if (static_cast<int>(p.y.size()) != p.H.rows)
    throw std::invalid_argument("solve_sparse_only: measurement size mismatch");
  auto objective = [&](const Vec& x) { return sparse_objective(p, x); };
  CoreResult core = admm_core(p.H, p.y, p.L, Mat(), p.lambda, cfg, objective);
  AdmmResult out;
  out.c1 = core.x;
  out.iterations = core.iterations;
  out.converged = core.converged;
  out.primal_residual = core.primal_residual;
  out.dual_residual = core.dual_residual;
  out.objective = sparse_objective(p, out.c1);
  return out;
}

Vec solve_smooth_only(const SmoothProblem& p) {
  if (static_cast<int>(p.y.size()) != p.H.rows)
    throw std::invalid_argument("solve_smooth_only: measurement size mismatch");
  Mat K(p.H.cols, p.H.cols);
  add_ata_at(K, p.H, 1.0, 0);
  add_ata_at(K, p.L, 2.0 * p.lambda, 0);
  Vec rhs;
  matvec_t(p.H, p.y, rhs);
  return Cholesky(K).solve(rhs);
}

}  // namespace sps
