#include "voi/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace voi::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kReducedCostTol = 1e-9;

// Full-tableau simplex state. The tableau holds B^{-1}A row by row; two
// extra rows carry the phase-2 and phase-1 reduced costs so a pivot updates
// everything in one sweep.
struct Tableau {
  int rows = 0;
  int cols = 0;  // structural + slack + artificial
  std::vector<std::vector<double>> a;  // rows x cols
  std::vector<double> rhs;
  std::vector<double> cost2;   // phase-2 reduced-cost row
  double obj2 = 0.0;
  std::vector<double> cost1;   // phase-1 reduced-cost row
  double obj1 = 0.0;
  std::vector<int> basis;      // size rows

  void pivot(int r, int c) {
    auto& prow = a[static_cast<std::size_t>(r)];
    const double inv = 1.0 / prow[static_cast<std::size_t>(c)];
    for (int j = 0; j < cols; ++j) prow[static_cast<std::size_t>(j)] *= inv;
    rhs[static_cast<std::size_t>(r)] *= inv;
    prow[static_cast<std::size_t>(c)] = 1.0;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = a[static_cast<std::size_t>(i)];
      const double f = row[static_cast<std::size_t>(c)];
      if (std::fabs(f) < 1e-14) {
        row[static_cast<std::size_t>(c)] = 0.0;
        continue;
      }
      for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(c)] = 0.0;
      rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(r)];
      if (rhs[static_cast<std::size_t>(i)] < 0.0 && rhs[static_cast<std::size_t>(i)] > -1e-11)
        rhs[static_cast<std::size_t>(i)] = 0.0;
    }
    auto update_cost = [&](std::vector<double>& cost, double& obj) {
      const double f = cost[static_cast<std::size_t>(c)];
      if (std::fabs(f) < 1e-14) {
        cost[static_cast<std::size_t>(c)] = 0.0;
        return;
      }
      for (int j = 0; j < cols; ++j) cost[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
      cost[static_cast<std::size_t>(c)] = 0.0;
      obj -= f * rhs[static_cast<std::size_t>(r)];
    };
    update_cost(cost2, obj2);
    update_cost(cost1, obj1);
    basis[static_cast<std::size_t>(r)] = c;
  }
};

// Runs the simplex on one phase. `allowed(j)` filters entering candidates.
// Returns false when an unbounded ray is found.
template <typename Allowed>
bool run_phase(Tableau& t, const std::vector<double>* cost, Allowed allowed,
               int& iterations) {
  const int bland_after = 5 * (t.rows + t.cols);
  for (;;) {
    const bool bland = iterations >= bland_after;
    int entering = -1;
    double best = -kReducedCostTol;
    for (int j = 0; j < t.cols; ++j) {
      if (!allowed(j)) continue;
      const double rc = (*cost)[static_cast<std::size_t>(j)];
      if (rc < best) {
        if (bland) {
          entering = j;
          break;
        }
        best = rc;
        entering = j;
      }
    }
    if (entering < 0) return true;  // optimal for this phase

    // Ratio test; lowest row index breaks Dantzig ties, lowest basis index
    // breaks Bland ties.
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t.rows; ++i) {
      const double aij = t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
      if (aij > kPivotTol) {
        const double ratio = t.rhs[static_cast<std::size_t>(i)] / aij;
        if (ratio < best_ratio - 1e-12) {
          best_ratio = ratio;
          leave = i;
        } else if (ratio < best_ratio + 1e-12 && leave >= 0 && bland &&
                   t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leave)]) {
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded direction
    t.pivot(leave, entering);
    ++iterations;
  }
}

}  // namespace

Solution solve_lp(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.objective.size());
  const int m_eq = static_cast<int>(lp.eq_matrix.size());
  const int m_ub = static_cast<int>(lp.ub_matrix.size());
  const int m = m_eq + m_ub;
  if (static_cast<int>(lp.eq_rhs.size()) != m_eq || static_cast<int>(lp.ub_rhs.size()) != m_ub)
    throw std::invalid_argument("solve_lp: rhs size mismatch");
  for (const auto& row : lp.eq_matrix)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("solve_lp: eq row size mismatch");
  for (const auto& row : lp.ub_matrix)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("solve_lp: ub row size mismatch");

  Solution out;
  if (m == 0) {
    // Only the sign constraints: the origin is optimal unless some objective
    // coefficient points to an unbounded improving ray.
    out.values.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
      const double c = lp.objective[static_cast<std::size_t>(j)];
      if ((lp.sense == Sense::maximize && c > kReducedCostTol) ||
          (lp.sense == Sense::minimize && c < -kReducedCostTol)) {
        out.status = Status::unbounded;
        return out;
      }
    }
    out.status = Status::optimal;
    out.objective_value = 0.0;
    return out;
  }

  const int n_slack = m_ub;
  const int n_art = m;
  Tableau t;
  t.rows = m;
  t.cols = n + n_slack + n_art;
  t.a.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(t.cols), 0.0));
  t.rhs.assign(static_cast<std::size_t>(m), 0.0);
  t.basis.assign(static_cast<std::size_t>(m), -1);

  // Rows: equalities first, then ub rows with +1 slack. Rows with negative
  // rhs are negated afterwards so every artificial starts feasible.
  for (int i = 0; i < m_eq; ++i) {
    for (int j = 0; j < n; ++j) t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lp.eq_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    t.rhs[static_cast<std::size_t>(i)] = lp.eq_rhs[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < m_ub; ++i) {
    const int r = m_eq + i;
    for (int j = 0; j < n; ++j) t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = lp.ub_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + i)] = 1.0;
    t.rhs[static_cast<std::size_t>(r)] = lp.ub_rhs[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < m; ++i) {
    if (t.rhs[static_cast<std::size_t>(i)] < 0.0) {
      for (int j = 0; j < n + n_slack; ++j) t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      t.rhs[static_cast<std::size_t>(i)] = -t.rhs[static_cast<std::size_t>(i)];
    }
    t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + n_slack + i)] = 1.0;
    t.basis[static_cast<std::size_t>(i)] = n + n_slack + i;
  }

  // Internally minimize; flip the sign for maximization.
  const double sign = (lp.sense == Sense::maximize) ? -1.0 : 1.0;
  t.cost2.assign(static_cast<std::size_t>(t.cols), 0.0);
  for (int j = 0; j < n; ++j) t.cost2[static_cast<std::size_t>(j)] = sign * lp.objective[static_cast<std::size_t>(j)];
  t.obj2 = 0.0;

  // Phase-1 reduced costs: artificials cost 1, so subtract every row.
  t.cost1.assign(static_cast<std::size_t>(t.cols), 0.0);
  t.obj1 = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n + n_slack; ++j) t.cost1[static_cast<std::size_t>(j)] -= t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    t.obj1 -= t.rhs[static_cast<std::size_t>(i)];
  }

  int iterations = 0;
  const int art_begin = n + n_slack;

  double rhs_scale = 1.0;
  for (int i = 0; i < m; ++i) rhs_scale = std::max(rhs_scale, std::fabs(t.rhs[static_cast<std::size_t>(i)]));

  if (!run_phase(t, &t.cost1, [&](int j) { return j < art_begin; }, iterations))
    throw std::logic_error("solve_lp: unbounded ray in phase 1");
  if (-t.obj1 > 1e-9 * (1.0 + rhs_scale)) {
    out.status = Status::infeasible;
    out.iterations = iterations;
    return out;
  }

  // Drive any leftover artificial out of the basis; a row with no eligible
  // pivot is redundant and stays pinned at zero.
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<std::size_t>(i)] < art_begin) continue;
    for (int j = 0; j < art_begin; ++j) {
      if (std::fabs(t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > 1e-7) {
        t.pivot(i, j);
        ++iterations;
        break;
      }
    }
  }

  if (!run_phase(t, &t.cost2, [&](int j) { return j < art_begin; }, iterations)) {
    out.status = Status::unbounded;
    out.iterations = iterations;
    return out;
  }

  out.status = Status::optimal;
  out.iterations = iterations;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) {
    const int b = t.basis[static_cast<std::size_t>(i)];
    if (b < n) out.values[static_cast<std::size_t>(b)] = std::max(0.0, t.rhs[static_cast<std::size_t>(i)]);
  }
  out.basis = t.basis;
  double obj = 0.0;
  for (int j = 0; j < n; ++j) obj += lp.objective[static_cast<std::size_t>(j)] * out.values[static_cast<std::size_t>(j)];
  out.objective_value = obj;
  return out;
}

}  // namespace voi::lp
