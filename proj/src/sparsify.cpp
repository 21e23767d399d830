#include "sps/sparsify.hpp"

#include <cmath>

#include "sps/simplex.hpp"

namespace sps {

namespace {

// LP over (c, u+, u-): minimize sum(u+ + u-) subject to
//   H c = H c0   (the measurements the solver settled on)
//   L c - u+ + u- = 0
// c free, u+- >= 0. Returns the c block on success.
struct LpRun {
  bool ok = false;
  Vec c;
  double l1 = 0.0;
};

LpRun min_l1_with_fixed_measurements(const Mat& H, const Mat& L, const Vec& c0) {
  const int nc = H.cols;
  const int np = L.rows;
  const int mrows = H.rows + np;
  const int nvars = nc + 2 * np;

  LpProblem lp;
  lp.A = Mat(mrows, nvars);
  lp.b.assign(mrows, 0.0);
  lp.cost.assign(nvars, 0.0);
  lp.is_free.assign(nvars, 0);

  Vec hc0;
  matvec(H, c0, hc0);
  for (int i = 0; i < H.rows; ++i) {
    for (int j = 0; j < nc; ++j) lp.A(i, j) = H(i, j);
    lp.b[i] = hc0[i];
  }
  for (int i = 0; i < np; ++i) {
    int r = H.rows + i;
    for (int j = 0; j < nc; ++j) lp.A(r, j) = L(i, j);
    lp.A(r, nc + i) = -1.0;
    lp.A(r, nc + np + i) = 1.0;
  }
  for (int j = 0; j < nc; ++j) lp.is_free[j] = 1;
  for (int j = nc; j < nvars; ++j) lp.cost[j] = 1.0;

  LpRun run;
  LpResult res = solve_lp(lp);
  if (res.status != LpStatus::optimal) return run;
  run.ok = true;
  run.c.assign(res.x.begin(), res.x.begin() + nc);
  run.l1 = res.objective;
  return run;
}

}  // namespace

int count_knots(const Vec& w, double& threshold) {
  double wmax = 0.0;
  for (double v : w) wmax = std::max(wmax, std::fabs(v));
  threshold = 1e-7 * std::max(1.0, wmax);
  int count = 0;
  for (double v : w)
    if (std::fabs(v) > threshold) ++count;
  return count;
}

SparsifyOutcome sparsify_composite(const CompositeProblem& p, const AdmmResult& r) {
  const int nb = (p.boundary.component == 1) ? p.boundary.count : 0;
  Mat H = nb ? drop_leading_columns(p.H1, nb) : p.H1;
  Mat L = nb ? drop_leading_columns(p.L1, nb) : p.L1;
  Vec c0(r.c1.begin() + nb, r.c1.end());

  SparsifyOutcome out;
  out.c1 = r.c1;
  Vec w;
  matvec(p.L1, r.c1, w);
  out.l1_before = norm1(w);
  out.l1_after = out.l1_before;

  LpRun run = min_l1_with_fixed_measurements(H, L, c0);
  if (run.ok) {
    out.lp_optimal = true;
    Vec cand = pad_leading_zeros(run.c, nb);
    double j0 = composite_objective(p, r.c1, r.c2);
    double j1 = composite_objective(p, cand, r.c2);
    if (j1 <= j0 + 1e-8 * (1.0 + std::fabs(j0))) {
      out.c1 = cand;
      out.replaced = true;
      out.l1_after = run.l1;
    }
  }
  matvec(p.L1, out.c1, w);
  out.knot_count = count_knots(w, out.knot_threshold);
  return out;
}

SparsifyOutcome sparsify_sparse_only(const SparseProblem& p, const AdmmResult& r) {
  SparsifyOutcome out;
  out.c1 = r.c1;
  Vec w;
  matvec(p.L, r.c1, w);
  out.l1_before = norm1(w);
  out.l1_after = out.l1_before;

  LpRun run = min_l1_with_fixed_measurements(p.H, p.L, r.c1);
  if (run.ok) {
    out.lp_optimal = true;
    double j0 = sparse_objective(p, r.c1);
    double j1 = sparse_objective(p, run.c);
    if (j1 <= j0 + 1e-8 * (1.0 + std::fabs(j0))) {
      out.c1 = run.c;
      out.replaced = true;
      out.l1_after = run.l1;
    }
  }
  matvec(p.L, out.c1, w);
  out.knot_count = count_knots(w, out.knot_threshold);
  return out;
}

}  // namespace sps
