#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sps/admm.hpp"
#include "sps/grid.hpp"
#include "sps/measurement.hpp"
#include "sps/regularization.hpp"

using sps::AdmmConfig;
using sps::AdmmResult;
using sps::CompositeProblem;
using sps::Mat;
using sps::SmoothProblem;
using sps::SparseProblem;
using sps::Vec;

namespace {

Vec random_vec(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(static_cast<std::size_t>(n));
  for (double& x : v) x = g(rng);
  return v;
}

CompositeProblem make_problem(int T, int M, int n01, int n02, double omega_max,
                              std::uint64_t seed) {
  sps::GridSpec grid(T);
  auto basis1 = sps::bspline(n01);
  auto basis2 = sps::centered_bspline(2 * n02);
  auto r1 = sps::active_range(grid, basis1);
  auto r2 = sps::active_range(grid, basis2);
  auto model = sps::make_cosine_model(M, omega_max, seed);

  CompositeProblem p;
  p.H1 = sps::assemble_system_matrix(model, basis1, r1, grid);
  p.H2 = sps::assemble_system_matrix(model, basis2, r2, grid);
  p.L1 = sps::sparse_reg_matrix(T, n01);
  p.L2 = sps::smooth_reg_matrix(T, n02);
  p.y = random_vec(M, seed + 1000);
  p.lambda1 = 5e-3;
  p.lambda2 = 1e-4;
  p.boundary = sps::boundary_constraint(n01, n02);
  return p;
}

double rel_gap(double a, double b) {
  return std::fabs(a - b) / (1.0 + std::min(std::fabs(a), std::fabs(b)));
}

}  // namespace

TEST_CASE("composite solver agrees with an independent primal-dual method") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    CAPTURE(seed);
    CompositeProblem p = make_problem(12, 6, 1, 2, 30.0, seed);
    AdmmResult r = sps::solve_composite(p);
    REQUIRE(r.converged);

    oracle::PdhgResult ref = oracle::pdhg_composite(p, 400000);
    CHECK(rel_gap(r.objective, ref.objective) <= 1e-6);

    // The reported objective is consistent with the returned coefficients.
    CHECK(sps::composite_objective(p, r.c1, r.c2) ==
          doctest::Approx(r.objective).epsilon(1e-10));
  }
}

TEST_CASE("composite solutions satisfy the optimality conditions") {
  for (std::uint64_t seed : {21u, 22u}) {
    CAPTURE(seed);
    CompositeProblem p = make_problem(14, 7, 1, 2, 40.0, seed);
    AdmmResult r = sps::solve_composite(p);
    REQUIRE(r.converged);
    CHECK(oracle::kkt_violation(p, r.c1, r.c2) <= 1e-5 * p.lambda1);
  }
}

TEST_CASE("pinned leading coefficients stay at zero") {
  CompositeProblem p = make_problem(10, 5, 2, 2, 25.0, 31);
  REQUIRE(p.boundary.component == 1);
  REQUIRE(p.boundary.count == 2);
  AdmmResult r = sps::solve_composite(p);
  CHECK(r.c1[0] == 0.0);
  CHECK(r.c1[1] == 0.0);
}

TEST_CASE("restarts land on the same objective and smooth component") {
  CompositeProblem p = make_problem(12, 6, 1, 2, 30.0, 41);
  AdmmConfig a, b;
  a.random_init = true;
  a.init_seed = 7;
  b.random_init = true;
  b.init_seed = 1234;
  AdmmResult ra = sps::solve_composite(p, a);
  AdmmResult rb = sps::solve_composite(p, b);
  REQUIRE(ra.converged);
  REQUIRE(rb.converged);
  CHECK(rel_gap(ra.objective, rb.objective) <= 1e-6);

  Vec la, lb;
  sps::matvec(p.L2, ra.c2, la);
  sps::matvec(p.L2, rb.c2, lb);
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < la.size(); ++i) {
    diff += (la[i] - lb[i]) * (la[i] - lb[i]);
    scale += la[i] * la[i];
  }
  CHECK(std::sqrt(diff) <= 1e-5 * std::sqrt(scale) + 1e-12);
}

TEST_CASE("objective settles after the initial iterations") {
  CompositeProblem p = make_problem(12, 6, 1, 2, 30.0, 51);
  AdmmConfig cfg;
  std::vector<double> trace;
  cfg.trace = [&](int, double obj) { trace.push_back(obj); };
  AdmmResult r = sps::solve_composite(p, cfg);
  REQUIRE(r.converged);
  REQUIRE(static_cast<int>(trace.size()) == r.iterations);
  for (double v : trace) CHECK(std::isfinite(v));
  double at10 = trace[std::min<std::size_t>(9, trace.size() - 1)];
  CHECK(trace.back() <= at10 * (1.0 + 1e-6) + 1e-9);
}

TEST_CASE("iteration cap reports non-convergence") {
  CompositeProblem p = make_problem(12, 6, 1, 2, 30.0, 61);
  AdmmConfig cfg;
  cfg.max_iter = 3;
  AdmmResult r = sps::solve_composite(p, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
}

TEST_CASE("sparse-only solver handles plain cases") {
  sps::GridSpec grid(12);
  auto basis = sps::bspline(1);
  auto range = sps::active_range(grid, basis);
  auto model = sps::make_cosine_model(6, 30.0, 71);

  SparseProblem p;
  p.H = sps::assemble_system_matrix(model, basis, range, grid);
  p.L = sps::sparse_reg_matrix(12, 1);
  p.lambda = 4e-3;

  SUBCASE("zero data gives the zero solution") {
    p.y.assign(6, 0.0);
    AdmmResult r = sps::solve_sparse_only(p);
    REQUIRE(r.converged);
    CHECK(r.objective <= 1e-18);
    for (double x : r.c1) CHECK(std::fabs(x) <= 1e-9);
  }

  SUBCASE("huge weight flattens the analysis output") {
    p.y = random_vec(6, 72);
    p.lambda = 1e3;
    AdmmResult r = sps::solve_sparse_only(p);
    REQUIRE(r.converged);
    Vec w;
    sps::matvec(p.L, r.c1, w);
    double l1 = 0.0;
    for (double x : w) l1 += std::fabs(x);
    CHECK(l1 <= 1e-6);
  }

  SUBCASE("objective matches the returned coefficients") {
    p.y = random_vec(6, 73);
    AdmmResult r = sps::solve_sparse_only(p);
    REQUIRE(r.converged);
    CHECK(sps::sparse_objective(p, r.c1) ==
          doctest::Approx(r.objective).epsilon(1e-10));
  }
}

TEST_CASE("smooth-only solver matches the normal equations") {
  sps::GridSpec grid(14);
  auto basis = sps::centered_bspline(4);
  auto range = sps::active_range(grid, basis);
  auto model = sps::make_cosine_model(8, 40.0, 81);

  SmoothProblem p;
  p.H = sps::assemble_system_matrix(model, basis, range, grid);
  p.L = sps::smooth_reg_matrix(14, 2);
  p.y = random_vec(8, 82);
  p.lambda = 2e-5;

  Vec c = sps::solve_smooth_only(p);
  REQUIRE(static_cast<int>(c.size()) == p.H.cols);

  int n = p.H.cols;
  Mat K(n, n);
  for (int i = 0; i < p.H.rows; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) K(a, b) += p.H(i, a) * p.H(i, b);
  for (int i = 0; i < p.L.rows; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        K(a, b) += 2.0 * p.lambda * p.L(i, a) * p.L(i, b);
  Vec rhs(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < p.H.rows; ++i)
    for (int a = 0; a < n; ++a) rhs[a] += p.H(i, a) * p.y[i];
  Vec want = oracle::gauss_solve(K, rhs);
  for (int i = 0; i < n; ++i)
    CHECK(c[i] == doctest::Approx(want[i]).epsilon(1e-7));
}
