#pragma once

#include <vector>

#include "voi/curve.hpp"
#include "voi/grid.hpp"
#include "voi/lp.hpp"
#include "voi/measure.hpp"
#include "voi/types.hpp"

namespace voi {

namespace detail {

// Per-grid-point decision values and divergences, shared across a budget sweep.
struct GridCache {
  std::vector<double> values;
  std::vector<double> costs;
};

GridCache build_grid_cache(const DecisionProblem& problem, const InformationMeasure& measure,
                           const PosteriorGrid& grid);

// Barycenter rows (first n-1 coordinates) plus the total-mass row. The last
// coordinate row is implied by the others; dropping it keeps the rows
// linearly independent, so basic solutions carry at most n+1 support points.
void append_moment_rows(lp::LinearProgram& prog, const PosteriorGrid& grid, const Belief& mu);

CurvePoint extract_point(const DecisionProblem& problem, const InformationMeasure& measure,
                         double eta, const PosteriorGrid& grid, const GridCache& cache,
                         const std::vector<double>& weights, double objective);

}  // namespace detail

// Best expected decision value among Bayes-plausible distributions on the
// grid carrying at most `eta` information.
CurvePoint efficient_value(const DecisionProblem& problem, const InformationMeasure& measure,
                           double eta, const PosteriorGrid& grid);

CurvePoint efficient_value_cached(const DecisionProblem& problem,
                                  const InformationMeasure& measure, double eta,
                                  const PosteriorGrid& grid, const detail::GridCache& cache);

// Sweep over an ascending list of budgets, evaluated in parallel per eta.
// Budgets above the admissible cap (min_full_info_cost) are rejected.
std::vector<CurvePoint> efficient_curve(const DecisionProblem& problem,
                                        const InformationMeasure& measure,
                                        const std::vector<double>& eta_list,
                                        const PosteriorGrid& grid);

// Smallest amount of information that already reaches the full-information
// value. Budgets must stay below this cap for the binding lemma to apply.
double min_full_info_cost(const DecisionProblem& problem, const InformationMeasure& measure,
                          const PosteriorGrid& grid);

}  // namespace voi
