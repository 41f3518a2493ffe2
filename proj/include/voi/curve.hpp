#pragma once

#include <optional>
#include <vector>

#include "voi/measure.hpp"

namespace voi {

// One sample of a value-of-information curve.
struct CurvePoint {
  double eta = 0.0;
  double value = 0.0;
  double realized_amount = 0.0;
  int support_size = 0;
  PosteriorDistribution solution;
};

struct BindingReport {
  bool skipped = false;  // eta above the admissible cap, nothing to check
  bool ok = false;
  double residual = 0.0;
};

// Whether the curve point used its information budget exactly. The default
// tolerance is 1e-6 * max(1, eta). Points with eta above the cap are skipped
// (the binding lemma assumes budgets below the cheapest full-information
// amount).
BindingReport check_binding(const CurvePoint& point, double eta_bar_limit, double tol = -1.0);

struct ConcavityReport {
  bool is_concave = false;
  double worst_violation = 0.0;    // max over triples of (chord average - midpoint), floored at 0
  double strictness_margin = 0.0;  // min over triples of (midpoint - chord average)
  double max_margin = 0.0;         // max over triples of the same quantity
  int triples = 0;
};

// Midpoint concavity over every (lo, mid, hi) sample triple whose middle
// budget is the average of the outer two. `slack` absorbs grid error.
ConcavityReport check_concavity(const std::vector<CurvePoint>& curve, double slack = 1e-4);

struct SlopeReport {
  double slope = 0.0;       // forward difference at the smallest positive eta
  bool diverging = false;   // successive difference quotients grow toward 0
};

// Forward-difference estimate of the marginal value of information at zero.
// Requires the curve to contain eta = 0 and at least two positive budgets.
SlopeReport marginal_value_at_zero(const std::vector<CurvePoint>& curve);

}  // namespace voi
