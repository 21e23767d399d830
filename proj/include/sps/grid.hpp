#pragma once

#include "sps/bspline.hpp"
#include "sps/linalg.hpp"

namespace sps {

// Uniform grid on [0,1] with T cells of width h = 1/T.
struct GridSpec {
  int T = 2;

  explicit GridSpec(int t);
  double h() const { return 1.0 / static_cast<double>(T); }
};

// Inclusive range of active basis indices k, so that the shifted bases
// beta(./h - k) are exactly those whose support meets (0,1).
struct IndexRanges {
  int lo = 0;
  int hi = 0;

  int count() const { return hi - lo + 1; }
};

// Active shifts of `basis` on the grid: k from 1 - last_break to
// T - first_break - 1.
IndexRanges active_range(const GridSpec& grid, const PiecewisePoly& basis);

// f(t) = sum_k c[k - range.lo] * basis(t/h - k).
double evaluate_component(const Vec& c, const IndexRanges& range,
                          const PiecewisePoly& basis, const GridSpec& grid,
                          double t);

// Batched evaluation at many points.
Vec evaluate_component(const Vec& c, const IndexRanges& range,
                       const PiecewisePoly& basis, const GridSpec& grid,
                       const Vec& ts);

}  // namespace sps
