#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sps/filters.hpp"

using sps::DigitalFilter;

namespace {

void check_taps(const DigitalFilter& f, int offset,
                const std::vector<double>& taps, double tol) {
  REQUIRE(f.offset == offset);
  REQUIRE(f.taps.size() == taps.size());
  for (std::size_t i = 0; i < taps.size(); ++i) {
    CAPTURE(i);
    CHECK(std::fabs(f.taps[i] - taps[i]) <= tol);
  }
}

// <L2 c, c> through the filter, i.e. sum_{k,m} c[k] rho[k-m] c[m].
double quad_form(const DigitalFilter& rho, const std::vector<double>& c) {
  double s = 0.0;
  int n = static_cast<int>(c.size());
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) s += c[k] * rho.at(k - m) * c[m];
  return s;
}

}  // namespace

TEST_CASE("finite difference taps are signed binomials") {
  check_taps(sps::fd_filter(1), 0, {1.0, -1.0}, 0.0);
  check_taps(sps::fd_filter(2), 0, {1.0, -2.0, 1.0}, 0.0);
  check_taps(sps::fd_filter(3), 0, {1.0, -3.0, 3.0, -1.0}, 0.0);
  check_taps(sps::fd_filter(4), 0, {1.0, -4.0, 6.0, -4.0, 1.0}, 0.0);
}

TEST_CASE("sampled kernels match B-spline integer samples") {
  check_taps(sps::sampled_kernel(1), 0, {1.0}, 0.0);
  check_taps(sps::sampled_kernel(2), -1, {1.0 / 6, 4.0 / 6, 1.0 / 6}, 1e-15);
  check_taps(sps::sampled_kernel(3), -2,
             {1.0 / 120, 26.0 / 120, 66.0 / 120, 26.0 / 120, 1.0 / 120}, 1e-15);
  check_taps(sps::sampled_kernel(4), -3,
             {1.0 / 5040, 120.0 / 5040, 1191.0 / 5040, 2416.0 / 5040,
              1191.0 / 5040, 120.0 / 5040, 1.0 / 5040},
             1e-15);
}

TEST_CASE("first order factors are plain differences") {
  check_taps(sps::autocorrelation_filter(1), -1, {-1.0, 2.0, -1.0}, 1e-12);
  check_taps(sps::autocorrelation_factor(1), 0, {1.0, -1.0}, 1e-12);
  check_taps(sps::spectral_factor(sps::sampled_kernel(1)), 0, {1.0}, 1e-12);
}

TEST_CASE("second order factors carry the closed-form radicals") {
  const double C = 0.21132486540518711775;   // sqrt((2 - sqrt(3)) / 6)
  const double Cp = 0.78867513459481288225;  // C * (2 + sqrt(3))

  check_taps(sps::spectral_factor(sps::sampled_kernel(2)), 0, {C, Cp}, 1e-10);
  check_taps(sps::autocorrelation_factor(2), 0,
             {C, 0.36602540378443864676, -1.3660254037844386468, Cp}, 1e-10);
  check_taps(sps::autocorrelation_filter(2), -3,
             {1.0 / 6, 0.0, -1.5, 8.0 / 3, -1.5, 0.0, 1.0 / 6}, 1e-10);
}

TEST_CASE("factorization identities hold for orders one through four") {
  for (int n0 = 1; n0 <= 4; ++n0) {
    CAPTURE(n0);
    DigitalFilter b = sps::sampled_kernel(n0);
    DigitalFilter bh = sps::spectral_factor(b);
    DigitalFilter g = sps::autocorrelation_factor(n0);
    DigitalFilter rho = sps::autocorrelation_filter(n0);

    // Support lengths and placement.
    CHECK(b.size() == 2 * n0 - 1);
    CHECK(b.offset == -(n0 - 1));
    CHECK(bh.size() == n0);
    CHECK(bh.offset == 0);
    CHECK(g.size() == 2 * n0);
    CHECK(g.offset == 0);
    CHECK(rho.size() == 4 * n0 - 1);
    CHECK(rho.offset == -(2 * n0 - 1));

    DigitalFilter bb = sps::convolve(bh, sps::reverse(bh));
    for (int k = b.lo() - 1; k <= b.hi() + 1; ++k)
      CHECK(std::fabs(bb.at(k) - b.at(k)) <= 1e-10);

    DigitalFilter gg = sps::convolve(g, sps::reverse(g));
    for (int k = rho.lo() - 1; k <= rho.hi() + 1; ++k)
      CHECK(std::fabs(gg.at(k) - rho.at(k)) <= 1e-10);

    // rho is positive semidefinite as a quadratic form.
    std::mt19937_64 rng(7000 + n0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> c(24);
      double nrm = 0.0;
      for (double& x : c) {
        x = gauss(rng);
        nrm += x * x;
      }
      CHECK(quad_form(rho, c) >= -1e-10 * nrm);
    }
  }
}

TEST_CASE("convolution is symmetric and respects offsets") {
  DigitalFilter a{{1.0, 2.0}, -1};
  DigitalFilter b{{3.0, -1.0, 0.5}, 2};
  DigitalFilter ab = sps::convolve(a, b);
  DigitalFilter ba = sps::convolve(b, a);
  REQUIRE(ab.offset == 1);
  REQUIRE(ab.size() == 4);
  for (int k = ab.lo(); k <= ab.hi(); ++k) CHECK(ab.at(k) == ba.at(k));
  CHECK(ab.at(1) == 3.0);
  CHECK(ab.at(2) == 5.0);
  CHECK(ab.at(3) == -1.5);
  CHECK(ab.at(4) == 1.0);

  DigitalFilter delta{{1.0}, 0};
  DigitalFilter same = sps::convolve(b, delta);
  check_taps(same, b.offset, b.taps, 0.0);
}

TEST_CASE("trim and reverse") {
  DigitalFilter f{{0.0, 0.0, 1.0, -2.0, 0.0}, -3};
  DigitalFilter t = sps::trim(f);
  check_taps(t, -1, {1.0, -2.0}, 0.0);

  DigitalFilter r = sps::reverse(t);
  REQUIRE(r.offset == 0);
  CHECK(r.at(0) == -2.0);
  CHECK(r.at(1) == 1.0);

  DigitalFilter zero{{0.0, 0.0}, 5};
  DigitalFilter tz = sps::trim(zero);
  CHECK(tz.size() == 1);
  CHECK(tz.taps[0] == 0.0);
}

TEST_CASE("spectral factor round-trips random causal filters") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int len = 2 + static_cast<int>(rng() % 3);
    DigitalFilter f{std::vector<double>(len), 0};
    for (double& x : f.taps) x = u(rng);
    f.taps[0] += 2.5;  // keep zeros away from the unit circle
    DigitalFilter s = sps::convolve(f, sps::reverse(f));
    DigitalFilter h = sps::spectral_factor(s);
    DigitalFilter back = sps::convolve(h, sps::reverse(h));
    for (int k = s.lo(); k <= s.hi(); ++k)
      CHECK(std::fabs(back.at(k) - s.at(k)) <= 1e-9);
  }
}

TEST_CASE("spectral factor rejects bad input") {
  // Zeros on the unit circle (double zero at z = 1).
  DigitalFilter circle{{-1.0, 2.0, -1.0}, -1};
  CHECK_THROWS_AS(sps::spectral_factor(circle), std::runtime_error);

  // Not symmetric.
  DigitalFilter skew{{1.0, 2.0, 2.0}, -1};
  CHECK_THROWS_AS(sps::spectral_factor(skew), std::invalid_argument);
}
