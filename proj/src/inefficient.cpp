#include "voi/inefficient.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "voi/errors.hpp"
#include "voi/lp.hpp"

namespace voi {

double max_grid_amount(const DecisionProblem& problem, const InformationMeasure& measure,
                       const PosteriorGrid& grid) {
  const auto cache = detail::build_grid_cache(problem, measure, grid);
  lp::LinearProgram prog;
  prog.sense = lp::Sense::maximize;
  prog.objective = cache.costs;
  detail::append_moment_rows(prog, grid, problem.prior());
  const auto sol = lp::solve_lp(prog);
  if (sol.status != lp::Status::optimal)
    throw std::logic_error("max_grid_amount: LP not optimal");
  return eval_phi(measure, std::max(0.0, sol.objective_value));
}

CurvePoint inefficient_value_cached(const DecisionProblem& problem,
                                    const InformationMeasure& measure, double eta,
                                    const PosteriorGrid& grid, const detail::GridCache& cache) {
  if (eta < 0.0) throw std::invalid_argument("inefficient_value: eta must be nonnegative");
  const double inner_floor = eval_phi_inverse(measure, eta);
  const std::size_t cols = grid.points.size();

  lp::LinearProgram prog;
  prog.sense = lp::Sense::minimize;
  prog.objective = cache.values;
  detail::append_moment_rows(prog, grid, problem.prior());
  std::vector<double> neg_costs(cols);
  for (std::size_t j = 0; j < cols; ++j) neg_costs[j] = -cache.costs[j];
  prog.ub_matrix.push_back(neg_costs);
  prog.ub_rhs.push_back(-inner_floor);
  const auto sol = lp::solve_lp(prog);
  if (sol.status == lp::Status::infeasible)
    throw InfeasibleEtaError(eta, max_grid_amount(problem, measure, grid));
  if (sol.status != lp::Status::optimal)
    throw std::logic_error("inefficient_value: LP unexpectedly unbounded");

  // Second pass: among the worst distributions, keep the one that carries
  // the least information. On flat segments the minimum is not unique, and
  // the least-information minimizer is the one the binding argument is
  // about.
  lp::LinearProgram refine;
  refine.sense = lp::Sense::minimize;
  refine.objective = cache.costs;
  detail::append_moment_rows(refine, grid, problem.prior());
  refine.eq_matrix.push_back(cache.values);
  refine.eq_rhs.push_back(sol.objective_value);
  refine.ub_matrix.push_back(std::move(neg_costs));
  refine.ub_rhs.push_back(-inner_floor);
  const auto refined = lp::solve_lp(refine);
  const auto& weights = (refined.status == lp::Status::optimal) ? refined.values : sol.values;
  return detail::extract_point(problem, measure, eta, grid, cache, weights,
                               sol.objective_value);
}

CurvePoint inefficient_value(const DecisionProblem& problem, const InformationMeasure& measure,
                             double eta, const PosteriorGrid& grid) {
  const auto cache = detail::build_grid_cache(problem, measure, grid);
  return inefficient_value_cached(problem, measure, eta, grid, cache);
}

std::vector<CurvePoint> inefficient_curve(const DecisionProblem& problem,
                                          const InformationMeasure& measure,
                                          const std::vector<double>& eta_list,
                                          const PosteriorGrid& grid) {
  if (eta_list.empty()) throw std::invalid_argument("inefficient_curve: empty eta list");
  for (std::size_t i = 0; i + 1 < eta_list.size(); ++i)
    if (eta_list[i] > eta_list[i + 1])
      throw std::invalid_argument("inefficient_curve: eta list must be ascending");
  const auto cache = detail::build_grid_cache(problem, measure, grid);

  std::vector<std::future<CurvePoint>> futures;
  futures.reserve(eta_list.size());
  for (double eta : eta_list)
    futures.push_back(std::async(std::launch::async, [&, eta] {
      return inefficient_value_cached(problem, measure, eta, grid, cache);
    }));
  std::vector<CurvePoint> out;
  out.reserve(eta_list.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

FlatnessReport check_flat_at_zero(const std::vector<CurvePoint>& curve,
                                  std::optional<double> eta_hat) {
  FlatnessReport r;
  if (!eta_hat.has_value()) return r;
  if (curve.empty() || std::fabs(curve.front().eta) > 0.0)
    throw std::invalid_argument("check_flat_at_zero: curve must start at eta = 0");
  r.applicable = true;
  const double u0 = curve.front().value;
  r.flat = true;
  for (const auto& p : curve) {
    if (p.eta > *eta_hat + kArithmeticTol) continue;
    const double dev = std::fabs(p.value - u0);
    r.max_deviation = std::max(r.max_deviation, dev);
    if (dev > 1e-7) r.flat = false;
  }
  return r;
}

}  // namespace voi
