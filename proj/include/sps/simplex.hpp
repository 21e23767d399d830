#pragma once

#include <cstdint>
#include <vector>

#include "sps/linalg.hpp"

namespace sps {

// Equality-form linear program
//   minimize cost^T x  subject to  A x = b,  x_j >= 0 unless is_free[j].
struct LpProblem {
  Mat A;
  Vec b;
  Vec cost;
  std::vector<std::uint8_t> is_free;  // empty means all variables >= 0
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::iteration_limit;
  Vec x;
  double objective = 0.0;
  int iterations = 0;
};

// Two-phase primal simplex on a dense tableau. Free variables may enter in
// either direction and never block the ratio test once basic. Dantzig
// pricing with a switch to Bland's rule after a run of degenerate pivots
// keeps the method from cycling. A returned optimum is a vertex of the
// feasible set.
LpResult solve_lp(const LpProblem& p);

}  // namespace sps
