#pragma once

#include <cstdint>
#include <functional>

#include "sps/linalg.hpp"
#include "sps/regularization.hpp"

namespace sps {

// min over (c1, c2) of
//   0.5 |H1 c1 + H2 c2 - y|^2 + lambda1 |L1 c1|_1 + lambda2 |L2 c2|^2,
// with the shared null space pinned through `boundary` (leading
// coefficients of one component forced to zero).
struct CompositeProblem {
  Mat H1, H2;
  Mat L1, L2;
  Vec y;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  BoundaryConstraint boundary;
};

// min over c of 0.5 |H c - y|^2 + lambda |L c|_1 (no boundary pinning).
struct SparseProblem {
  Mat H, L;
  Vec y;
  double lambda = 0.0;
};

// min over c of 0.5 |H c - y|^2 + lambda |L c|^2, solved in closed form.
struct SmoothProblem {
  Mat H, L;
  Vec y;
  double lambda = 0.0;
};

struct AdmmConfig {
  double mu = 0.0;       // penalty parameter; 0 picks lambda1
  double alpha = 1.5;    // over-relaxation
  int max_iter = 20000;
  double tol_abs = 1e-10;
  double tol_rel = 1e-8;
  bool random_init = false;       // start (z, u) from N(0,1) draws
  std::uint64_t init_seed = 0;    // seed for random_init
  // Optional per-iteration observer (iteration, objective); evaluating the
  // objective each step is costly, so this is for tests and diagnostics.
  std::function<void(int, double)> trace;
};

struct AdmmResult {
  Vec c1;
  Vec c2;  // empty for the sparse-only model
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

AdmmResult solve_composite(const CompositeProblem& p, const AdmmConfig& cfg = {});

AdmmResult solve_sparse_only(const SparseProblem& p, const AdmmConfig& cfg = {});

// Normal equations (H^T H + 2 lambda L^T L) c = H^T y.
Vec solve_smooth_only(const SmoothProblem& p);

double composite_objective(const CompositeProblem& p, const Vec& c1, const Vec& c2);
double sparse_objective(const SparseProblem& p, const Vec& c);
double smooth_objective(const SmoothProblem& p, const Vec& c);

}  // namespace sps
