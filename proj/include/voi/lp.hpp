#pragma once

#include <vector>

namespace voi::lp {

enum class Sense { maximize, minimize };

enum class Status { optimal, infeasible, unbounded };

// Dense linear program over nonnegative variables:
//   optimize objective . x
//   s.t.  eq_matrix x  = eq_rhs
//         ub_matrix x <= ub_rhs
//         x >= 0
// Intended shape: few rows, possibly tens of thousands of columns.
struct LinearProgram {
  Sense sense = Sense::maximize;
  std::vector<double> objective;
  std::vector<std::vector<double>> eq_matrix;
  std::vector<double> eq_rhs;
  std::vector<std::vector<double>> ub_matrix;
  std::vector<double> ub_rhs;
};

struct Solution {
  Status status = Status::infeasible;
  std::vector<double> values;  // structural variables only
  double objective_value = 0.0;
  std::vector<int> basis;      // basic column indices (slack columns >= #structural)
  int iterations = 0;
};

// Two-phase primal dense simplex. Dantzig pricing with lowest-index
// tie-breaks; Bland's rule takes over after 5*(rows+cols) iterations so
// termination is guaranteed. The pivot sequence is deterministic, so the
// returned basis is reproducible for identical input.
Solution solve_lp(const LinearProgram& lp);

}  // namespace voi::lp
