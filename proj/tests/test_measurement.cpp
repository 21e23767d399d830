#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sps/measurement.hpp"

using sps::GridSpec;
using sps::IndexRanges;
using sps::MeasurementFunctional;
using sps::MeasurementModel;
using sps::PiecewisePoly;

namespace {

// Reference value of one system-matrix entry: integrate the shifted basis
// against the measurement weight, cutting at every piece boundary so each
// quadrature cell is smooth.
double entry_oracle(const MeasurementFunctional& f, const PiecewisePoly& basis,
                    int k, const GridSpec& grid) {
  const double h = grid.h();
  auto weight = [&](double t) {
    return f.kind == MeasurementFunctional::Kind::cosine
               ? std::cos(f.omega * t + f.theta)
               : 1.0;
  };
  double sum = 0.0;
  for (int j = 0; j < static_cast<int>(basis.pieces.size()); ++j) {
    double ta = std::max(0.0, (k + basis.first_break + j) * h);
    double tb = std::min(1.0, (k + basis.first_break + j + 1) * h);
    if (tb <= ta) continue;
    sum += oracle::integrate(
        [&](double t) { return basis.eval(t / h - k) * weight(t); }, ta, tb, 32);
  }
  return sum;
}

}  // namespace

TEST_CASE("oscillatory polynomial integrals match frozen references") {
  // Values computed with 30-digit arithmetic.
  CHECK(sps::integrate_poly_cosine({2.0, -0.25, 0.0, 1.0}, 0.2, 0.9, 37.5, 1.1) ==
        doctest::Approx(-0.05909802796486613609).epsilon(1e-12));
  CHECK(sps::integrate_poly_cosine({1.0, 0.5, -0.125}, 0.0, 1.0, 0.3, 0.7) ==
        doctest::Approx(0.78748562068791026743).epsilon(1e-13));
  CHECK(sps::integrate_poly_cosine({1.0}, 0.0, 1.0, 100.0, 0.0) ==
        doctest::Approx(-0.0050636564110975879366).epsilon(1e-12));

  // Same degree-7 integrand on both sides of the quadrature/recursion
  // switch at |w|(b-a) = 4.
  std::vector<double> p7 = {0.5, 0, 0, 0, 0, 0, 0, 1.0};
  CHECK(sps::integrate_poly_cosine(p7, -0.3, 0.8, 3.9, -2.0) ==
        doctest::Approx(0.12598119568500930602).epsilon(1e-12));
  CHECK(sps::integrate_poly_cosine(p7, -0.3, 0.8, 3.6, -2.0) ==
        doctest::Approx(0.13261103946139945183).epsilon(1e-12));
}

TEST_CASE("oscillatory polynomial integrals match quadrature everywhere") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> ab(-2.0, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 6.28);
  const double ws[] = {0.0, 0.01, 0.5, 3.0, 5.0, 12.0, 40.0};

  for (int trial = 0; trial < 40; ++trial) {
    int deg = static_cast<int>(rng() % 9);
    std::vector<double> p(static_cast<std::size_t>(deg) + 1);
    for (double& c : p) c = coef(rng);
    double a = ab(rng), b = ab(rng);
    if (a > b) std::swap(a, b);
    double phi = phase(rng);
    for (double w : ws) {
      double got = sps::integrate_poly_cosine(p, a, b, w, phi);
      double want = oracle::integrate(
          [&](double u) {
            double v = 0.0, up = 1.0;
            for (double c : p) {
              v += c * up;
              up *= u;
            }
            return v * std::cos(w * u + phi);
          },
          a, b, 32);
      CHECK(std::fabs(got - want) <= 1e-12 * (1.0 + std::fabs(want)));
    }
  }

  CHECK(sps::integrate_poly_cosine({1.0, 1.0}, 0.5, 0.5, 3.0, 0.1) == 0.0);
}

TEST_CASE("zero frequency reduces to a plain polynomial integral") {
  // int_0^2 (1 + 3u^2) du = 10, damped by cos(phi).
  double got = sps::integrate_poly_cosine({1.0, 0.0, 3.0}, 0.0, 2.0, 0.0, 0.6);
  CHECK(got == doctest::Approx(10.0 * std::cos(0.6)).epsilon(1e-14));
}

TEST_CASE("basis measurements agree with piecewise quadrature") {
  GridSpec grid(16);
  for (auto basis : {sps::bspline(1), sps::bspline(2), sps::centered_bspline(4)}) {
    IndexRanges range = sps::active_range(grid, basis);
    std::vector<MeasurementFunctional> fs = {
        MeasurementFunctional::make_dc(),
        MeasurementFunctional::make_cosine(7.3, 0.4),
        MeasurementFunctional::make_cosine(95.0, 5.9),
    };
    for (const auto& f : fs)
      for (int k = range.lo; k <= range.hi; ++k) {
        double got = sps::measure_basis(f, basis, k, grid);
        double want = entry_oracle(f, basis, k, grid);
        CHECK(std::fabs(got - want) <= 1e-12 * (1.0 + std::fabs(want)));
      }
  }
}

TEST_CASE("interior dc measurements equal the cell width") {
  GridSpec grid(16);
  auto basis = sps::bspline(3);
  IndexRanges range = sps::active_range(grid, basis);
  auto dc = MeasurementFunctional::make_dc();
  // Shifts whose support lies fully inside [0,1] integrate to h exactly.
  for (int k = 0; k <= grid.T - 3; ++k)
    CHECK(sps::measure_basis(dc, basis, k, grid) ==
          doctest::Approx(grid.h()).epsilon(1e-13));
  // Clipped edge shifts integrate to strictly less.
  CHECK(sps::measure_basis(dc, basis, range.lo, grid) < grid.h() * 0.999);
  CHECK(sps::measure_basis(dc, basis, range.hi, grid) < grid.h() * 0.999);
}

TEST_CASE("point measurements sample the shifted basis") {
  GridSpec grid(8);
  auto basis = sps::centered_bspline(4);
  auto f = MeasurementFunctional::make_point(0.3);
  for (int k = -2; k <= 9; ++k)
    CHECK(sps::measure_basis(f, basis, k, grid) ==
          basis.eval(0.3 * grid.T - k));
}

TEST_CASE("cosine model is deterministic with a dc row first") {
  MeasurementModel m1 = sps::make_cosine_model(20, 100.0, 77);
  MeasurementModel m2 = sps::make_cosine_model(20, 100.0, 77);
  REQUIRE(m1.size() == 20);
  CHECK(m1[0].kind == MeasurementFunctional::Kind::dc);
  for (std::size_t i = 1; i < m1.size(); ++i) {
    CHECK(m1[i].kind == MeasurementFunctional::Kind::cosine);
    CHECK(m1[i].omega > 0.0);
    CHECK(m1[i].omega <= 100.0);
    CHECK(m1[i].theta >= 0.0);
    CHECK(m1[i].theta < 6.2831853071795865);
    CHECK(m1[i].omega == m2[i].omega);
    CHECK(m1[i].theta == m2[i].theta);
  }

  MeasurementModel m3 = sps::make_cosine_model(20, 100.0, 78);
  bool differs = false;
  for (std::size_t i = 1; i < m3.size(); ++i)
    differs = differs || m3[i].omega != m1[i].omega;
  CHECK(differs);
}

TEST_CASE("system matrix rows are the per-functional measurements") {
  GridSpec grid(8);
  auto basis = sps::bspline(2);
  IndexRanges range = sps::active_range(grid, basis);
  MeasurementModel model = sps::make_cosine_model(5, 40.0, 3);
  sps::Mat H = sps::assemble_system_matrix(model, basis, range, grid);
  REQUIRE(H.rows == 5);
  REQUIRE(H.cols == range.count());
  for (int i = 0; i < H.rows; ++i)
    for (int k = range.lo; k <= range.hi; ++k)
      CHECK(H(i, k - range.lo) == sps::measure_basis(model[i], basis, k, grid));
}
