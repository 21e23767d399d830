#pragma once

#include "sps/admm.hpp"
#include "sps/linalg.hpp"

namespace sps {

// Result of replacing a dense solver iterate with a vertex of the solution
// set. When the LP fails or would raise the objective, the original
// coefficients are kept and `replaced` stays false.
struct SparsifyOutcome {
  Vec c1;
  bool lp_optimal = false;
  bool replaced = false;
  int knot_count = 0;
  double knot_threshold = 0.0;
  double l1_before = 0.0;
  double l1_after = 0.0;
};

// Minimizes |L1 c1|_1 subject to keeping the measurements of the sparse
// component fixed at their solver values. The minimizer is a basic
// solution, so the sparse component ends with at most M - n01 active knots.
SparsifyOutcome sparsify_composite(const CompositeProblem& p, const AdmmResult& r);

SparsifyOutcome sparsify_sparse_only(const SparseProblem& p, const AdmmResult& r);

// Knots strictly above the detection threshold 1e-7 * max(1, |w|_inf).
int count_knots(const Vec& w, double& threshold);

}  // namespace sps
