#include "voi/curve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace voi {

BindingReport check_binding(const CurvePoint& point, double eta_bar_limit, double tol) {
  BindingReport r;
  if (point.eta > eta_bar_limit) {
    r.skipped = true;
    return r;
  }
  if (tol < 0.0) tol = 1e-6 * std::max(1.0, point.eta);
  r.residual = std::fabs(point.realized_amount - point.eta);
  r.ok = r.residual <= tol;
  return r;
}

ConcavityReport check_concavity(const std::vector<CurvePoint>& curve, double slack) {
  if (curve.size() < 3)
    throw std::invalid_argument("check_concavity: need at least 3 curve points");
  ConcavityReport r;
  r.is_concave = true;
  r.strictness_margin = std::numeric_limits<double>::infinity();
  r.max_margin = -std::numeric_limits<double>::infinity();
  const std::size_t n = curve.size();
  double eta_scale = 1.0;
  for (const auto& p : curve) eta_scale = std::max(eta_scale, std::fabs(p.eta));
  for (std::size_t lo = 0; lo + 2 < n; ++lo) {
    for (std::size_t mid = lo + 1; mid + 1 < n; ++mid) {
      for (std::size_t hi = mid + 1; hi < n; ++hi) {
        const double target = 0.5 * (curve[lo].eta + curve[hi].eta);
        if (std::fabs(curve[mid].eta - target) > 1e-9 * eta_scale) continue;
        const double margin = curve[mid].value - 0.5 * (curve[lo].value + curve[hi].value);
        ++r.triples;
        if (margin < -slack) r.is_concave = false;
        r.worst_violation = std::max(r.worst_violation, -margin);
        r.strictness_margin = std::min(r.strictness_margin, margin);
        r.max_margin = std::max(r.max_margin, margin);
      }
    }
  }
  if (r.triples == 0)
    throw std::invalid_argument("check_concavity: no midpoint triples in the eta sample");
  r.worst_violation = std::max(0.0, r.worst_violation);
  return r;
}

SlopeReport marginal_value_at_zero(const std::vector<CurvePoint>& curve) {
  if (curve.size() < 3 || std::fabs(curve.front().eta) > 0.0)
    throw std::invalid_argument("marginal_value_at_zero: curve must start at eta = 0 "
                                "and contain at least two positive budgets");
  const double v0 = curve.front().value;
  SlopeReport r;
  r.slope = (curve[1].value - v0) / curve[1].eta;
  const double next = (curve[2].value - v0) / curve[2].eta;
  // A quotient that keeps growing as eta shrinks points at an unbounded
  // one-sided derivative (the square-root regime).
  r.diverging = r.slope > next * 1.2;
  return r;
}

}  // namespace voi
