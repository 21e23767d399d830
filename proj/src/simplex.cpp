#include "sps/simplex.hpp"

#include <cmath>
#include <stdexcept>

#include "sps/kernels.hpp"

namespace sps {

namespace {

constexpr double kRcTol = 1e-9;    // reduced-cost threshold
constexpr double kFeasTol = 1e-7;  // phase-1 objective threshold
constexpr double kPivTol = 1e-10;  // ratio-test denominators
constexpr int kBlandAfter = 50;    // consecutive degenerate pivots

struct Tableau {
  int m, n;             // constraint rows, structural columns
  int width;            // n + m artificials + rhs
  std::vector<Vec> row;
  Vec r1, r2;           // phase-1 / phase-2 reduced-cost rows
  std::vector<int> basis;
  std::vector<std::uint8_t> active;
  std::vector<std::uint8_t> in_basis;

  double& rhs(int i) { return row[i][width - 1]; }
};

void pivot(Tableau& t, int r, int e) {
  const auto& k = kern::ops();
  double piv = t.row[r][e];
  k.scal(t.width, 1.0 / piv, t.row[r].data());
  t.row[r][e] = 1.0;
  for (int i = 0; i < t.m; ++i) {
    if (i == r || !t.active[i]) continue;
    double f = t.row[i][e];
    if (f != 0.0) {
      k.axpy(t.width, -f, t.row[r].data(), t.row[i].data());
      t.row[i][e] = 0.0;
    }
  }
  for (Vec* c : {&t.r1, &t.r2}) {
    double f = (*c)[e];
    if (f != 0.0) {
      k.axpy(t.width, -f, t.row[r].data(), c->data());
      (*c)[e] = 0.0;
    }
  }
  t.in_basis[t.basis[r]] = 0;
  t.in_basis[e] = 1;
  t.basis[r] = e;
}

// Entering column and direction under the given cost row. Returns -1 when
// no nonbasic structural column improves.
int price(const Tableau& t, const Vec& r, const std::vector<std::uint8_t>& is_free,
          bool bland, int& dir) {
  int best = -1;
  double best_score = kRcTol;
  for (int j = 0; j < t.n; ++j) {
    if (t.in_basis[j]) continue;
    double rc = r[j];
    double score;
    int d;
    if (is_free[j]) {
      score = std::fabs(rc);
      d = rc < 0.0 ? 1 : -1;
    } else {
      score = -rc;
      d = 1;
    }
    if (score > best_score) {
      best = j;
      best_score = score;
      dir = d;
      if (bland) return best;
    }
  }
  return best;
}

// Leaving row by the minimum-ratio rule; free basic variables never block.
int ratio_test(Tableau& t, int e, int dir, const std::vector<std::uint8_t>& is_free,
               bool bland) {
  int best = -1;
  double best_t = 0.0;
  for (int i = 0; i < t.m; ++i) {
    if (!t.active[i]) continue;
    int bj = t.basis[i];
    if (bj < t.n && is_free[bj]) continue;
    double a = dir * t.row[i][e];
    if (a <= kPivTol) continue;
    double ratio = std::max(t.rhs(i), 0.0) / a;
    if (best < 0 || ratio < best_t - 1e-12) {
      best = i;
      best_t = ratio;
    } else if (ratio < best_t + 1e-12) {
      bool take = bland ? (t.basis[i] < t.basis[best]) : (t.basis[i] > t.basis[best]);
      if (take) best = i;
    }
  }
  return best;
}

}  // namespace

LpResult solve_lp(const LpProblem& p) {
  const int m = p.A.rows;
  const int n = p.A.cols;
  if (static_cast<int>(p.b.size()) != m || static_cast<int>(p.cost.size()) != n)
    throw std::invalid_argument("solve_lp: size mismatch");
  std::vector<std::uint8_t> is_free = p.is_free;
  if (is_free.empty()) is_free.assign(n, 0);
  if (static_cast<int>(is_free.size()) != n)
    throw std::invalid_argument("solve_lp: is_free size mismatch");

  LpResult out;

  Tableau t;
  t.m = m;
  t.n = n;
  t.width = n + m + 1;
  t.row.assign(m, Vec(t.width, 0.0));
  t.basis.resize(m);
  t.active.assign(m, 1);
  t.in_basis.assign(n + m, 0);

  // Row equilibration, sign flip to nonnegative rhs, artificial basis.
  for (int i = 0; i < m; ++i) {
    double s = std::fabs(p.b[i]);
    for (int j = 0; j < n; ++j) s = std::max(s, std::fabs(p.A(i, j)));
    if (s == 0.0) s = 1.0;
    double flip = (p.b[i] < 0.0) ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.row[i][j] = flip * p.A(i, j) / s;
    t.row[i][t.width - 1] = flip * p.b[i] / s;
    t.row[i][n + i] = 1.0;
    t.basis[i] = n + i;
    t.in_basis[n + i] = 1;
  }

  t.r1.assign(t.width, 0.0);
  t.r2.assign(t.width, 0.0);
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < m; ++i) col += t.row[i][j];
    t.r1[j] = -col;
    t.r2[j] = p.cost[j];
  }
  double b_sum = 0.0;
  for (int i = 0; i < m; ++i) b_sum += t.rhs(i);
  t.r1[t.width - 1] = -b_sum;

  const int iter_cap = 200 + 20 * (m + n);
  bool bland = false;
  int degenerate_run = 0;

  auto run_phase = [&](const Vec& costs) -> LpStatus {
    while (true) {
      if (out.iterations >= iter_cap) return LpStatus::iteration_limit;
      int dir = 1;
      int e = price(t, costs, is_free, bland, dir);
      if (e < 0) return LpStatus::optimal;
      int r = ratio_test(t, e, dir, is_free, bland);
      if (r < 0) return LpStatus::unbounded;
      double step = std::max(t.rhs(r), 0.0) / std::fabs(t.row[r][e]);
      degenerate_run = (step <= 1e-12) ? degenerate_run + 1 : 0;
      if (degenerate_run > kBlandAfter) bland = true;
      pivot(t, r, e);
      ++out.iterations;
    }
  };

  LpStatus s1 = run_phase(t.r1);
  if (s1 == LpStatus::iteration_limit) {
    out.status = s1;
    return out;
  }
  double infeas = -t.r1[t.width - 1];
  if (infeas > kFeasTol) {
    out.status = LpStatus::infeasible;
    return out;
  }

  // Drive leftover artificials out of the basis; rows that cannot pivot
  // are redundant and drop out.
  for (int i = 0; i < m; ++i) {
    if (!t.active[i] || t.basis[i] < n) continue;
    int e = -1;
    double best = 1e-8;
    for (int j = 0; j < n; ++j) {
      if (t.in_basis[j]) continue;
      if (std::fabs(t.row[i][j]) > best) {
        best = std::fabs(t.row[i][j]);
        e = j;
      }
    }
    if (e >= 0)
      pivot(t, i, e);
    else
      t.active[i] = 0;
  }

  bland = false;
  degenerate_run = 0;
  LpStatus s2 = run_phase(t.r2);
  if (s2 != LpStatus::optimal) {
    out.status = s2;
    return out;
  }

  out.status = LpStatus::optimal;
  out.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (t.active[i] && t.basis[i] < n) out.x[t.basis[i]] = t.rhs(i);
  out.objective = dot(p.cost, out.x);
  return out;
}

}  // namespace sps
