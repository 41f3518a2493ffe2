#pragma once

#include <vector>

#include "voi/measure.hpp"
#include "voi/types.hpp"

namespace voi {

// Halfspace {x : normal . x >= offset} in belief coordinates.
struct Halfspace {
  std::vector<double> normal;
  double offset = 0.0;

  double slack(const Belief& x) const;
};

// The polytope of beliefs at which one action is optimal. Halfspaces compare
// the owning action against every other undominated action; vertices are the
// extreme points (filled in for problems with at most 4 states).
struct DecisionRegion {
  int action_index = -1;
  std::vector<Halfspace> halfspaces;
  std::vector<Belief> vertices;
  std::vector<double> interior_point;  // strictly feasible witness

  bool contains(const Belief& x, double tol = kFeasibilityTol) const;
};

struct ValueResult {
  double value = 0.0;
  std::vector<int> argmax;  // all actions within kFeasibilityTol of the max
};

// Upper envelope of the actions' expected payoffs at a belief.
ValueResult value_function(const DecisionProblem& problem, const Belief& x);

// Actions that are strictly optimal at some belief, found by maximizing the
// worst payoff advantage over the simplex. Sorted ascending.
std::vector<int> undominated_actions(const DecisionProblem& problem);

// One region per undominated action; the regions tile the simplex. Vertices
// come from enumerating (n-1)-subsets of the combined constraint set, which
// is only attempted for n <= 4 states (halfspace form is always filled).
std::vector<DecisionRegion> decision_regions(const DecisionProblem& problem);

struct LocateResult {
  int region_pos = -1;   // index into the regions vector
  bool on_boundary = false;
};

// Finds a region containing x; the boundary flag is set when some
// inter-region halfspace holds with equality.
LocateResult locate_region(const std::vector<DecisionRegion>& regions, const Belief& x);

// Largest amount of information attainable by distributions supported on the
// prior's decision region: the vertex-supported linear program from the
// flatness argument. Requires the prior strictly inside its region.
double flat_threshold(const DecisionProblem& problem, const InformationMeasure& measure,
                      const std::vector<DecisionRegion>& regions);

}  // namespace voi
