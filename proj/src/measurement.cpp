#include "sps/measurement.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sps {

namespace {

constexpr int kGlPoints = 20;

struct GlTable {
  double node[kGlPoints];
  double weight[kGlPoints];
};

// Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
GlTable make_gl_table() {
  GlTable t;
  const int n = kGlPoints;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    t.node[i] = -x;
    t.node[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    t.weight[i] = w;
    t.weight[n - 1 - i] = w;
  }
  return t;
}

const GlTable& gl_table() {
  static const GlTable t = make_gl_table();
  return t;
}

double poly_eval(const std::vector<double>& c, double u) {
  double v = 0.0;
  for (int p = static_cast<int>(c.size()) - 1; p >= 0; --p) v = v * u + c[p];
  return v;
}

}  // namespace

double integrate_poly_cosine(const std::vector<double>& coeffs, double a,
                             double b, double w, double phi) {
  if (coeffs.size() > 9)
    throw std::invalid_argument("integrate_poly_cosine: degree > 8");
  if (coeffs.empty() || b <= a) return 0.0;

  if (std::fabs(w) * (b - a) < 4.0) {
    // Over this span the cosine's Taylor series is captured exactly by
    // degree-39 quadrature, so 20 Gauss-Legendre points are exact here.
    const GlTable& t = gl_table();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kGlPoints; ++i) {
      double u = mid + half * t.node[i];
      s += t.weight[i] * poly_eval(coeffs, u) * std::cos(w * u + phi);
    }
    return half * s;
  }

  // Integration by parts: C_n = int u^n cos(w u + phi), S_n the sine version.
  int deg = static_cast<int>(coeffs.size()) - 1;
  double sa = std::sin(w * a + phi), sb = std::sin(w * b + phi);
  double ca = std::cos(w * a + phi), cb = std::cos(w * b + phi);
  double pa = 1.0, pb = 1.0;  // a^n, b^n
  double C = (sb - sa) / w;
  double S = (ca - cb) / w;
  double result = coeffs[0] * C;
  for (int n = 1; n <= deg; ++n) {
    pa *= a;
    pb *= b;
    double Cn = (pb * sb - pa * sa) / w - (static_cast<double>(n) / w) * S;
    double Sn = (pa * ca - pb * cb) / w + (static_cast<double>(n) / w) * C;
    C = Cn;
    S = Sn;
    result += coeffs[n] * C;
  }
  return result;
}

MeasurementModel make_cosine_model(int m, double omega_max, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("make_cosine_model: M must be >= 1");
  if (omega_max <= 0.0)
    throw std::invalid_argument("make_cosine_model: omega_max must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  MeasurementModel model;
  model.push_back(MeasurementFunctional::make_dc());
  for (int i = 1; i < m; ++i) {
    double omega = omega_max * (1.0 - u01(rng));  // in (0, omega_max]
    double theta = 2.0 * M_PI * u01(rng);
    model.push_back(MeasurementFunctional::make_cosine(omega, theta));
  }
  return model;
}

double measure_basis(const MeasurementFunctional& f, const PiecewisePoly& basis,
                     int k, const GridSpec& grid) {
  const double h = grid.h();
  if (f.kind == MeasurementFunctional::Kind::point)
    return basis.eval(f.x0 * static_cast<double>(grid.T) - k);

  double w = (f.kind == MeasurementFunctional::Kind::cosine) ? f.omega : 0.0;
  double theta = (f.kind == MeasurementFunctional::Kind::cosine) ? f.theta : 0.0;
  double s = 0.0;
  for (std::size_t j = 0; j < basis.pieces.size(); ++j) {
    double left = static_cast<double>(k + basis.first_break + static_cast<int>(j));
    double ta = std::max(0.0, h * left);
    double tb = std::min(1.0, h * (left + 1.0));
    if (tb <= ta) continue;
    double ua = ta / h - left;
    double ub = tb / h - left;
    s += h * integrate_poly_cosine(basis.pieces[j], ua, ub, w * h, w * h * left + theta);
  }
  return s;
}

Mat assemble_system_matrix(const MeasurementModel& model,
                           const PiecewisePoly& basis, const IndexRanges& range,
                           const GridSpec& grid) {
  Mat H(static_cast<int>(model.size()), range.count());
  for (int m = 0; m < H.rows; ++m)
    for (int k = range.lo; k <= range.hi; ++k)
      H(m, k - range.lo) = measure_basis(model[m], basis, k, grid);
  return H;
}

}  // namespace sps
