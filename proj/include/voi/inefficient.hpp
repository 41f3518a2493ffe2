#pragma once

#include <optional>
#include <vector>

#include "voi/curve.hpp"
#include "voi/efficient.hpp"
#include "voi/grid.hpp"
#include "voi/measure.hpp"
#include "voi/types.hpp"

namespace voi {

// Worst expected decision value among Bayes-plausible distributions on the
// grid carrying at least `eta` information. Among the minimizers, the one
// using the least information is reported (a second LP pass), which is what
// makes the empirical mirror of the binding lemma checkable. Throws
// InfeasibleEtaError when no grid distribution can carry `eta`.
CurvePoint inefficient_value(const DecisionProblem& problem, const InformationMeasure& measure,
                             double eta, const PosteriorGrid& grid);

CurvePoint inefficient_value_cached(const DecisionProblem& problem,
                                    const InformationMeasure& measure, double eta,
                                    const PosteriorGrid& grid, const detail::GridCache& cache);

std::vector<CurvePoint> inefficient_curve(const DecisionProblem& problem,
                                          const InformationMeasure& measure,
                                          const std::vector<double>& eta_list,
                                          const PosteriorGrid& grid);

// Largest amount carried by any grid distribution (attained by the
// vertex-supported one once the grid holds the simplex vertices).
double max_grid_amount(const DecisionProblem& problem, const InformationMeasure& measure,
                       const PosteriorGrid& grid);

struct FlatnessReport {
  bool applicable = false;  // false when the prior sits on a region boundary
  bool flat = false;
  double max_deviation = 0.0;
};

// Certifies that the curve stays at U(0) for every sampled budget up to the
// flat threshold. Pass an empty threshold when the prior is not interior.
FlatnessReport check_flat_at_zero(const std::vector<CurvePoint>& curve,
                                  std::optional<double> eta_hat);

}  // namespace voi
