#include "voi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "voi/linsolve.hpp"
#include "voi/lp.hpp"

namespace voi {

double Halfspace::slack(const Belief& x) const {
  double s = -offset;
  for (int i = 0; i < x.dim(); ++i) s += normal[static_cast<std::size_t>(i)] * x[i];
  return s;
}

bool DecisionRegion::contains(const Belief& x, double tol) const {
  for (const auto& h : halfspaces)
    if (h.slack(x) < -tol) return false;
  return true;
}

ValueResult value_function(const DecisionProblem& problem, const Belief& x) {
  if (x.dim() != problem.num_states())
    throw std::invalid_argument("value_function: belief dimension mismatch");
  ValueResult r;
  r.value = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < problem.num_actions(); ++a)
    r.value = std::max(r.value, problem.payoff(a, x));
  for (int a = 0; a < problem.num_actions(); ++a)
    if (problem.payoff(a, x) >= r.value - kFeasibilityTol) r.argmax.push_back(a);
  return r;
}

namespace {

// Greatest payoff advantage action i can secure against every rival at some
// belief. Positive means strictly optimal somewhere.
struct AdvantageResult {
  double delta = 0.0;
  std::vector<double> witness;
};

AdvantageResult best_advantage(const DecisionProblem& problem, int i) {
  const int n = problem.num_states();
  const int m = problem.num_actions();
  // Variables: x(n), delta+ , delta-
  lp::LinearProgram prog;
  prog.sense = lp::Sense::maximize;
  prog.objective.assign(static_cast<std::size_t>(n + 2), 0.0);
  prog.objective[static_cast<std::size_t>(n)] = 1.0;
  prog.objective[static_cast<std::size_t>(n + 1)] = -1.0;
  prog.eq_matrix.push_back(std::vector<double>(static_cast<std::size_t>(n + 2), 0.0));
  for (int s = 0; s < n; ++s) prog.eq_matrix[0][static_cast<std::size_t>(s)] = 1.0;
  prog.eq_rhs.push_back(1.0);
  const auto& u = problem.utility();
  for (int j = 0; j < m; ++j) {
    if (j == i) continue;
    std::vector<double> row(static_cast<std::size_t>(n + 2), 0.0);
    for (int s = 0; s < n; ++s)
      row[static_cast<std::size_t>(s)] =
          u[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] -
          u[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(n)] = 1.0;
    row[static_cast<std::size_t>(n + 1)] = -1.0;
    prog.ub_matrix.push_back(std::move(row));
    prog.ub_rhs.push_back(0.0);
  }
  const auto sol = lp::solve_lp(prog);
  if (sol.status != lp::Status::optimal)
    throw std::logic_error("best_advantage: unexpected LP status");
  AdvantageResult r;
  r.delta = sol.objective_value;
  r.witness.assign(sol.values.begin(), sol.values.begin() + n);
  return r;
}

std::vector<int> combination_first(int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

bool combination_next(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

std::vector<int> undominated_actions(const DecisionProblem& problem) {
  std::vector<int> keep;
  for (int a = 0; a < problem.num_actions(); ++a)
    if (best_advantage(problem, a).delta > kFeasibilityTol) keep.push_back(a);
  return keep;
}

std::vector<DecisionRegion> decision_regions(const DecisionProblem& problem) {
  const int n = problem.num_states();
  const auto undominated = undominated_actions(problem);
  if (undominated.size() < 2)
    throw std::invalid_argument(
        "decision_regions: fewer than 2 undominated actions (value function is affine)");

  const auto& u = problem.utility();
  std::vector<DecisionRegion> regions;
  for (int i : undominated) {
    DecisionRegion region;
    region.action_index = i;
    for (int j : undominated) {
      if (j == i) continue;
      Halfspace h;
      h.offset = 0.0;
      h.normal.assign(static_cast<std::size_t>(n), 0.0);
      for (int s = 0; s < n; ++s)
        h.normal[static_cast<std::size_t>(s)] =
            u[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] -
            u[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
      region.halfspaces.push_back(std::move(h));
    }
    region.interior_point = best_advantage(problem, i).witness;
    regions.push_back(std::move(region));
  }

  if (n > 4) return regions;  // halfspace form only

  // Vertex enumeration: pick n-1 tight constraints from the region's
  // halfspaces plus the simplex facets, close the system with sum(x) = 1,
  // and keep the feasible solutions.
  for (auto& region : regions) {
    const int n_half = static_cast<int>(region.halfspaces.size());
    const int n_constraints = n_half + n;
    if (n == 1) continue;
    std::vector<Belief> vertices;
    auto combo = combination_first(n - 1);
    do {
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      a.push_back(std::vector<double>(static_cast<std::size_t>(n), 1.0));
      b.push_back(1.0);
      for (int idx : combo) {
        if (idx < n_half) {
          a.push_back(region.halfspaces[static_cast<std::size_t>(idx)].normal);
          b.push_back(region.halfspaces[static_cast<std::size_t>(idx)].offset);
        } else {
          std::vector<double> row(static_cast<std::size_t>(n), 0.0);
          row[static_cast<std::size_t>(idx - n_half)] = 1.0;
          a.push_back(std::move(row));
          b.push_back(0.0);
        }
      }
      std::vector<double> x;
      if (!solve_linear_system(std::move(a), std::move(b), x)) continue;
      bool ok = true;
      for (double v : x)
        if (v < -kFeasibilityTol || !std::isfinite(v)) ok = false;
      if (!ok) continue;
      double sum = 0.0;
      for (double& v : x) {
        v = std::max(0.0, v);
        sum += v;
      }
      for (double& v : x) v /= sum;
      Belief candidate(x);
      if (!region.contains(candidate)) continue;
      bool dup = false;
      for (const auto& v : vertices)
        if (v.distance_inf(candidate) <= 1e-8) dup = true;
      if (!dup) vertices.push_back(std::move(candidate));
    } while (combination_next(combo, n_constraints));

    std::sort(vertices.begin(), vertices.end(), [](const Belief& a, const Belief& b) {
      for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i] - 1e-12) return true;
        if (a[i] > b[i] + 1e-12) return false;
      }
      return false;
    });
    region.vertices = std::move(vertices);
  }
  return regions;
}

LocateResult locate_region(const std::vector<DecisionRegion>& regions, const Belief& x) {
  LocateResult r;
  for (std::size_t pos = 0; pos < regions.size(); ++pos) {
    if (regions[pos].contains(x)) {
      r.region_pos = static_cast<int>(pos);
      for (const auto& h : regions[pos].halfspaces)
        if (std::fabs(h.slack(x)) <= kFeasibilityTol) r.on_boundary = true;
      return r;
    }
  }
  throw std::logic_error("locate_region: no region contains the belief");
}

double flat_threshold(const DecisionProblem& problem, const InformationMeasure& measure,
                      const std::vector<DecisionRegion>& regions) {
  const Belief& mu = problem.prior();
  if (measure.reference().distance_inf(mu) > kFeasibilityTol)
    throw std::invalid_argument("flat_threshold: measure must be anchored at the prior");
  const auto loc = locate_region(regions, mu);
  if (loc.on_boundary)
    throw std::invalid_argument(
        "flat_threshold: prior lies on a region boundary, no positive threshold exists");
  const auto& region = regions[static_cast<std::size_t>(loc.region_pos)];
  if (region.vertices.empty())
    throw std::invalid_argument("flat_threshold: region vertices unavailable (more than 4 states)");

  // Largest expected divergence over distributions on the region's vertices
  // with barycenter at the prior.
  const int n = mu.dim();
  const int cols = static_cast<int>(region.vertices.size());
  lp::LinearProgram prog;
  prog.sense = lp::Sense::maximize;
  prog.objective.resize(static_cast<std::size_t>(cols));
  for (int j = 0; j < cols; ++j)
    prog.objective[static_cast<std::size_t>(j)] =
        eval_divergence(measure, region.vertices[static_cast<std::size_t>(j)]);
  for (int s = 0; s + 1 < n; ++s) {
    std::vector<double> row(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] = region.vertices[static_cast<std::size_t>(j)][s];
    prog.eq_matrix.push_back(std::move(row));
    prog.eq_rhs.push_back(mu[s]);
  }
  prog.eq_matrix.push_back(std::vector<double>(static_cast<std::size_t>(cols), 1.0));
  prog.eq_rhs.push_back(1.0);

  const auto sol = lp::solve_lp(prog);
  if (sol.status != lp::Status::optimal)
    throw std::logic_error("flat_threshold: vertex program unexpectedly " +
                           std::string(sol.status == lp::Status::infeasible ? "infeasible" : "unbounded"));
  if (!(sol.objective_value > 0.0))
    throw std::logic_error("flat_threshold: nonpositive optimum for an interior prior");
  return eval_phi(measure, sol.objective_value);
}

}  // namespace voi
