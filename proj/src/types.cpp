#include "voi/types.hpp"

#include <cmath>
#include <stdexcept>

namespace voi {

Belief::Belief(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("belief: empty weight vector");
  double sum = 0.0;
  for (double& v : w_) {
    if (!std::isfinite(v)) throw std::invalid_argument("belief: non-finite weight");
    if (v < -kArithmeticTol) throw std::invalid_argument("belief: negative weight");
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kArithmeticTol)
    throw std::invalid_argument("belief: weights sum to " + std::to_string(sum) +
                                ", expected 1");
  for (double& v : w_) v /= sum;
}

bool Belief::strictly_positive() const {
  for (double v : w_)
    if (v <= 0.0) return false;
  return true;
}

double Belief::distance_inf(const Belief& other) const {
  double d = 0.0;
  for (int i = 0; i < dim() && i < other.dim(); ++i)
    d = std::max(d, std::fabs(w_[static_cast<std::size_t>(i)] - other[i]));
  if (dim() != other.dim()) return 1.0;
  return d;
}

DecisionProblem::DecisionProblem(std::vector<std::string> state_labels,
                                 std::vector<std::string> action_labels,
                                 std::vector<std::vector<double>> utility,
                                 Belief prior)
    : state_labels_(std::move(state_labels)),
      action_labels_(std::move(action_labels)),
      utility_(std::move(utility)),
      prior_(std::move(prior)) {
  const int n = num_states();
  const int m = num_actions();
  if (n < 2) throw std::invalid_argument("problem: need at least 2 states");
  if (m < 2) throw std::invalid_argument("problem: need at least 2 actions");
  if (static_cast<int>(utility_.size()) != m)
    throw std::invalid_argument("problem: utility must have one row per action");
  for (const auto& row : utility_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("problem: utility row length != state count");
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("problem: non-finite utility");
  }
  if (prior_.dim() != n)
    throw std::invalid_argument("problem: prior dimension != state count");
  if (!prior_.strictly_positive())
    throw std::invalid_argument("problem: prior must have full support");
}

double DecisionProblem::payoff(int action, const Belief& x) const {
  if (x.dim() != num_states())
    throw std::invalid_argument("payoff: belief dimension mismatch");
  const auto& row = utility_[static_cast<std::size_t>(action)];
  double v = 0.0;
  for (int s = 0; s < num_states(); ++s) v += x[s] * row[static_cast<std::size_t>(s)];
  return v;
}

EtaBudget::EtaBudget(double eta_in, double eta_bar_in) : eta(eta_in), eta_bar(eta_bar_in) {
  if (!(eta >= 0.0)) throw std::invalid_argument("budget: eta must be nonnegative");
  if (!(eta_bar >= 0.0)) throw std::invalid_argument("budget: eta_bar must be nonnegative");
  if (eta > eta_bar) throw std::invalid_argument("budget: eta exceeds eta_bar");
}

}  // namespace voi
