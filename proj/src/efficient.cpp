#include "voi/efficient.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "voi/errors.hpp"
#include "voi/geometry.hpp"
#include "voi/lp.hpp"

namespace voi {

namespace detail {

GridCache build_grid_cache(const DecisionProblem& problem, const InformationMeasure& measure,
                           const PosteriorGrid& grid) {
  if (measure.reference().distance_inf(problem.prior()) > kArithmeticTol)
    throw std::invalid_argument("grid cache: measure must be anchored at the prior");
  if (grid.states != problem.num_states())
    throw std::invalid_argument("grid cache: grid state count mismatch");
  GridCache cache;
  cache.values.reserve(grid.points.size());
  cache.costs.reserve(grid.points.size());
  for (const auto& x : grid.points) {
    cache.values.push_back(value_function(problem, x).value);
    cache.costs.push_back(eval_divergence(measure, x));
  }
  return cache;
}

void append_moment_rows(lp::LinearProgram& prog, const PosteriorGrid& grid, const Belief& mu) {
  const int n = mu.dim();
  const std::size_t cols = grid.points.size();
  for (int s = 0; s + 1 < n; ++s) {
    std::vector<double> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = grid.points[j][s];
    prog.eq_matrix.push_back(std::move(row));
    prog.eq_rhs.push_back(mu[s]);
  }
  prog.eq_matrix.push_back(std::vector<double>(cols, 1.0));
  prog.eq_rhs.push_back(1.0);
}

CurvePoint extract_point(const DecisionProblem& problem, const InformationMeasure& measure,
                         double eta, const PosteriorGrid& grid, const GridCache& cache,
                         const std::vector<double>& weights, double objective) {
  std::vector<Belief> support;
  std::vector<double> probs;
  double inner = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] > 1e-10) {
      support.push_back(grid.points[j]);
      probs.push_back(weights[j]);
      inner += weights[j] * cache.costs[j];
    }
  }
  double total = 0.0;
  for (double p : probs) total += p;
  for (double& p : probs) p /= total;
  if (inner < 0.0 && inner > -kFeasibilityTol) inner = 0.0;
  CurvePoint point{eta, objective, eval_phi(measure, inner), static_cast<int>(support.size()),
                   PosteriorDistribution(std::move(support), std::move(probs), problem.prior())};
  return point;
}

}  // namespace detail

CurvePoint efficient_value(const DecisionProblem& problem, const InformationMeasure& measure,
                           double eta, const PosteriorGrid& grid) {
  const auto cache = detail::build_grid_cache(problem, measure, grid);
  return efficient_value_cached(problem, measure, eta, grid, cache);
}

CurvePoint efficient_value_cached(const DecisionProblem& problem,
                                  const InformationMeasure& measure, double eta,
                                  const PosteriorGrid& grid, const detail::GridCache& cache) {
  if (eta < 0.0) throw std::invalid_argument("efficient_value: eta must be nonnegative");
  const double inner_budget = eval_phi_inverse(measure, eta);
  lp::LinearProgram prog;
  prog.sense = lp::Sense::maximize;
  prog.objective = cache.values;
  detail::append_moment_rows(prog, grid, problem.prior());
  prog.ub_matrix.push_back(cache.costs);
  prog.ub_rhs.push_back(inner_budget);
  const auto sol = lp::solve_lp(prog);
  if (sol.status != lp::Status::optimal)
    throw std::logic_error("efficient_value: LP unexpectedly not optimal (point mass at the prior is always feasible)");
  return detail::extract_point(problem, measure, eta, grid, cache, sol.values,
                               sol.objective_value);
}

double min_full_info_cost(const DecisionProblem& problem, const InformationMeasure& measure,
                          const PosteriorGrid& grid) {
  if (undominated_actions(problem).size() < 2)
    throw std::invalid_argument(
        "min_full_info_cost: value function is affine (fewer than 2 undominated actions)");
  const auto cache = detail::build_grid_cache(problem, measure, grid);
  double full_value = 0.0;
  for (int s = 0; s < problem.num_states(); ++s) {
    double best = problem.utility()[0][static_cast<std::size_t>(s)];
    for (int a = 1; a < problem.num_actions(); ++a)
      best = std::max(best, problem.utility()[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)]);
    full_value += problem.prior()[s] * best;
  }
  lp::LinearProgram prog;
  prog.sense = lp::Sense::minimize;
  prog.objective = cache.costs;
  detail::append_moment_rows(prog, grid, problem.prior());
  prog.eq_matrix.push_back(cache.values);
  prog.eq_rhs.push_back(full_value);
  const auto sol = lp::solve_lp(prog);
  if (sol.status != lp::Status::optimal)
    throw std::logic_error("min_full_info_cost: LP not optimal (simplex vertices are on every grid)");
  return eval_phi(measure, std::max(0.0, sol.objective_value));
}

std::vector<CurvePoint> efficient_curve(const DecisionProblem& problem,
                                        const InformationMeasure& measure,
                                        const std::vector<double>& eta_list,
                                        const PosteriorGrid& grid) {
  if (eta_list.empty()) throw std::invalid_argument("efficient_curve: empty eta list");
  for (std::size_t i = 0; i + 1 < eta_list.size(); ++i)
    if (eta_list[i] > eta_list[i + 1])
      throw std::invalid_argument("efficient_curve: eta list must be ascending");
  const double eta_bar = min_full_info_cost(problem, measure, grid);
  for (double eta : eta_list) {
    if (eta < 0.0) throw std::invalid_argument("efficient_curve: negative eta");
    if (eta > eta_bar + kArithmeticTol) throw BudgetCapError(eta, eta_bar);
  }
  const auto cache = detail::build_grid_cache(problem, measure, grid);

  std::vector<std::future<CurvePoint>> futures;
  futures.reserve(eta_list.size());
  for (double eta : eta_list)
    futures.push_back(std::async(std::launch::async, [&, eta] {
      return efficient_value_cached(problem, measure, eta, grid, cache);
    }));
  std::vector<CurvePoint> out;
  out.reserve(eta_list.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace voi
