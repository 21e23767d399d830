#pragma once

#include <cstdint>
#include <vector>

#include "sps/grid.hpp"
#include "sps/linalg.hpp"

namespace sps {

// One linear measurement of a signal on [0,1].
struct MeasurementFunctional {
  enum class Kind { dc, cosine, point };
  Kind kind = Kind::dc;
  double omega = 0.0;  // cosine
  double theta = 0.0;  // cosine
  double x0 = 0.0;     // point

  static MeasurementFunctional make_dc() { return {}; }
  static MeasurementFunctional make_cosine(double w, double th) {
    return {Kind::cosine, w, th, 0.0};
  }
  static MeasurementFunctional make_point(double x) {
    return {Kind::point, 0.0, 0.0, x};
  }
};

using MeasurementModel = std::vector<MeasurementFunctional>;

// DC functional followed by M-1 random cosines with pulsation in
// (0, omega_max] and phase in [0, 2*pi).
MeasurementModel make_cosine_model(int m, double omega_max, std::uint64_t seed);

// int_a^b p(u) cos(w u + phi) du for a polynomial p given by coefficients
// of u^k, degree <= 8. Uses an integration-by-parts recursion for
// oscillatory arguments and Gauss-Legendre quadrature when |w|(b-a) is
// small, where the cosine is polynomial-like to machine precision.
double integrate_poly_cosine(const std::vector<double>& coeffs, double a,
                             double b, double w, double phi);

// Applies one functional to a shifted basis function beta(./h - k).
double measure_basis(const MeasurementFunctional& f, const PiecewisePoly& basis,
                     int k, const GridSpec& grid);

// H[m][k - range.lo] = nu_m(beta(./h - k)).
Mat assemble_system_matrix(const MeasurementModel& model,
                           const PiecewisePoly& basis, const IndexRanges& range,
                           const GridSpec& grid);

}  // namespace sps
