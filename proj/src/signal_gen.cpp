#include "sps/signal_gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sps/bspline.hpp"

namespace sps {

double SparseSignal::eval(double t) const {
  double s = 0.0;
  for (std::size_t k = 0; k < knots.size(); ++k)
    s += amps[k] * greens_function(n01, t - knots[k]);
  return s;
}

double SmoothSignal::eval(double t) const {
  if (samples.empty()) return 0.0;
  double pos = t / step;
  int j = static_cast<int>(std::floor(pos));
  int last = static_cast<int>(samples.size()) - 1;
  if (j < 0) return samples.front();
  if (j >= last) return samples.back();
  double frac = pos - static_cast<double>(j);
  return samples[j] + frac * (samples[j + 1] - samples[j]);
}

SparseSignal make_sparse_gt(int k, double sigma1, int n01, double margin,
                            std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("make_sparse_gt: negative jump count");
  if (n01 < 1) throw std::invalid_argument("make_sparse_gt: order must be >= 1");
  if (margin < 0.0 || margin >= 0.5)
    throw std::invalid_argument("make_sparse_gt: margin must lie in [0, 0.5)");
  SparseSignal s;
  s.n01 = n01;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> loc(margin, 1.0 - margin);
  for (int i = 0; i < k; ++i) s.knots.push_back(loc(rng));
  std::sort(s.knots.begin(), s.knots.end());
  std::normal_distribution<double> amp(0.0, sigma1);
  for (int i = 0; i < k; ++i) s.amps.push_back(amp(rng));
  return s;
}

SmoothSignal make_smooth_gt(double sigma2, int n02, double step,
                            std::uint64_t seed) {
  if (n02 < 1) throw std::invalid_argument("make_smooth_gt: order must be >= 1");
  if (!(step > 0.0) || step > 0.5)
    throw std::invalid_argument("make_smooth_gt: bad step");
  const int n = static_cast<int>(std::lround(1.0 / step));
  if (n < 2) throw std::invalid_argument("make_smooth_gt: grid too coarse");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> inc(0.0, sigma2 * std::sqrt(step));
  SmoothSignal s;
  s.step = step;
  s.samples.assign(n + 1, 0.0);
  for (int j = 1; j <= n; ++j) s.samples[j] = s.samples[j - 1] + inc(rng);
  // Higher levels are anchored running integrals of the previous level.
  for (int level = 2; level <= n02; ++level) {
    Vec next(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) next[j] = next[j - 1] + step * s.samples[j - 1];
    s.samples = std::move(next);
  }
  return s;
}

Vec measure_sparse(const SparseSignal& s, const MeasurementModel& model) {
  // nu(power kernel at knot x_k) in closed form: substitute t = x_k + u.
  std::vector<double> coeffs(s.n01, 0.0);
  double fact = 1.0;
  for (int i = 1; i < s.n01; ++i) fact *= static_cast<double>(i);
  coeffs[s.n01 - 1] = 1.0 / fact;

  Vec out(model.size(), 0.0);
  for (std::size_t m = 0; m < model.size(); ++m) {
    const auto& f = model[m];
    double v = 0.0;
    if (f.kind == MeasurementFunctional::Kind::point) {
      v = s.eval(f.x0);
    } else {
      double w = (f.kind == MeasurementFunctional::Kind::cosine) ? f.omega : 0.0;
      double th = (f.kind == MeasurementFunctional::Kind::cosine) ? f.theta : 0.0;
      for (std::size_t k = 0; k < s.knots.size(); ++k) {
        double xk = s.knots[k];
        if (xk >= 1.0) continue;
        v += s.amps[k] *
             integrate_poly_cosine(coeffs, 0.0, 1.0 - xk, w, w * xk + th);
      }
    }
    out[m] = v;
  }
  return out;
}

Vec measure_smooth(const SmoothSignal& s, const MeasurementModel& model) {
  const int n = static_cast<int>(s.samples.size()) - 1;
  Vec out(model.size(), 0.0);
  for (std::size_t m = 0; m < model.size(); ++m) {
    const auto& f = model[m];
    if (f.kind == MeasurementFunctional::Kind::point) {
      out[m] = s.eval(f.x0);
      continue;
    }
    double w = (f.kind == MeasurementFunctional::Kind::cosine) ? f.omega : 0.0;
    double th = (f.kind == MeasurementFunctional::Kind::cosine) ? f.theta : 0.0;
    double v = 0.0;
    for (int j = 0; j < n; ++j) {
      double tj = static_cast<double>(j) * s.step;
      double slope = (s.samples[j + 1] - s.samples[j]) / s.step;
      v += integrate_poly_cosine({s.samples[j], slope}, 0.0, s.step, w,
                                 w * tj + th);
    }
    out[m] = v;
  }
  return out;
}

Vec add_noise(const Vec& clean, double snr_db, std::uint64_t seed) {
  if (snr_db >= 300.0 || std::isinf(snr_db)) return clean;
  double cn = norm2(clean);
  if (cn == 0.0)
    throw std::invalid_argument("add_noise: zero signal with finite snr");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Vec noise(clean.size());
  for (auto& v : noise) v = g(rng);
  double nn = norm2(noise);
  double scale = (cn / nn) * std::pow(10.0, -snr_db / 20.0);
  Vec y = clean;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += scale * noise[i];
  return y;
}

double snr_db(const Vec& ref, const Vec& rec) {
  if (ref.size() != rec.size())
    throw std::invalid_argument("snr_db: length mismatch");
  double e = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    double d = ref[i] - rec[i];
    e += d * d;
  }
  double r = norm2(ref);
  if (e == 0.0) return 300.0;
  double v = 20.0 * std::log10(r / std::sqrt(e));
  return std::min(v, 300.0);
}

}  // namespace sps
