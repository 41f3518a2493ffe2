#pragma once

#include <string>
#include <vector>

namespace voi {

// Global tolerance ladder. Three distinct scales so that arithmetic noise,
// constraint feasibility, and solver optimality never chain into each other.
inline constexpr double kArithmeticTol = 1e-12;
inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kOptimalityTol = 1e-6;

// A probability vector over states; a point of the simplex.
class Belief {
 public:
  // Validates nonnegativity and that the entries sum to one within the
  // arithmetic tolerance, then renormalizes exactly.
  explicit Belief(std::vector<double> weights);

  int dim() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& weights() const { return w_; }

  bool strictly_positive() const;
  double distance_inf(const Belief& other) const;

 private:
  std::vector<double> w_;
};

// A finite decision problem: states, actions, a payoff matrix and a
// full-support prior.
class DecisionProblem {
 public:
  DecisionProblem(std::vector<std::string> state_labels,
                  std::vector<std::string> action_labels,
                  std::vector<std::vector<double>> utility, Belief prior);

  int num_states() const { return static_cast<int>(state_labels_.size()); }
  int num_actions() const { return static_cast<int>(action_labels_.size()); }
  const std::vector<std::string>& state_labels() const { return state_labels_; }
  const std::vector<std::string>& action_labels() const { return action_labels_; }

  // utility()[a][s] is the payoff of action a in state s
  const std::vector<std::vector<double>>& utility() const { return utility_; }
  const Belief& prior() const { return prior_; }

  // Expected payoff of an action at a belief.
  double payoff(int action, const Belief& x) const;

 private:
  std::vector<std::string> state_labels_;
  std::vector<std::string> action_labels_;
  std::vector<std::vector<double>> utility_;
  Belief prior_;
};

// An information budget together with its cap.
struct EtaBudget {
  double eta;
  double eta_bar;

  EtaBudget(double eta_in, double eta_bar_in);
};

}  // namespace voi
