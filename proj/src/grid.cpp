#include "sps/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace sps {

GridSpec::GridSpec(int t) : T(t) {
  if (t < 2) throw std::invalid_argument("GridSpec: T must be >= 2");
}

IndexRanges active_range(const GridSpec& grid, const PiecewisePoly& basis) {
  IndexRanges r;
  r.lo = 1 - basis.last_break();
  r.hi = grid.T - basis.first_break - 1;
  if (r.count() < 1) throw std::invalid_argument("active_range: empty range");
  return r;
}

double evaluate_component(const Vec& c, const IndexRanges& range,
                          const PiecewisePoly& basis, const GridSpec& grid,
                          double t) {
  if (static_cast<int>(c.size()) != range.count())
    throw std::invalid_argument("evaluate_component: coefficient count mismatch");
  double x = t * static_cast<double>(grid.T);
  int fx = static_cast<int>(std::floor(x));
  int klo = std::max(range.lo, fx - basis.last_break() + 1);
  int khi = std::min(range.hi, fx - basis.first_break);
  double s = 0.0;
  for (int k = klo; k <= khi; ++k)
    s += c[k - range.lo] * basis.eval(x - static_cast<double>(k));
  return s;
}

Vec evaluate_component(const Vec& c, const IndexRanges& range,
                       const PiecewisePoly& basis, const GridSpec& grid,
                       const Vec& ts) {
  Vec out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    out[i] = evaluate_component(c, range, basis, grid, ts[i]);
  return out;
}

}  // namespace sps
