#include "voi/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace voi {

namespace {

std::size_t lattice_count(int states, int resolution) {
  // C(k + n - 1, n - 1)
  std::size_t num = 1;
  for (int i = 1; i < states; ++i) {
    num = num * static_cast<std::size_t>(resolution + i);
    num /= static_cast<std::size_t>(i);
  }
  return num;
}

void emit_lattice(int states, int resolution, std::vector<int>& counts, int coord,
                  int remaining, std::vector<Belief>& out) {
  if (coord == states - 1) {
    counts[static_cast<std::size_t>(coord)] = remaining;
    std::vector<double> w(static_cast<std::size_t>(states));
    for (int i = 0; i < states; ++i)
      w[static_cast<std::size_t>(i)] =
          static_cast<double>(counts[static_cast<std::size_t>(i)]) / resolution;
    out.emplace_back(std::move(w));
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    counts[static_cast<std::size_t>(coord)] = c;
    emit_lattice(states, resolution, counts, coord + 1, remaining - c, out);
  }
}

bool on_lattice(const Belief& x, int resolution) {
  for (int i = 0; i < x.dim(); ++i) {
    const double scaled = x[i] * resolution;
    if (std::fabs(scaled - std::round(scaled)) > 1e-9) return false;
  }
  return true;
}

}  // namespace

int default_resolution(int states) {
  switch (states) {
    case 2: return 1000;
    case 3: return 120;
    default: return 40;
  }
}

PosteriorGrid make_grid(int states, int resolution, const Belief& prior, std::size_t cap) {
  if (states < 2 || states > 4)
    throw std::invalid_argument("make_grid: supported state counts are 2..4");
  if (resolution < 2) throw std::invalid_argument("make_grid: resolution must be >= 2");
  if (prior.dim() != states) throw std::invalid_argument("make_grid: prior dimension mismatch");
  const std::size_t count = lattice_count(states, resolution);
  if (count > cap)
    throw std::length_error("make_grid: lattice would have " + std::to_string(count) +
                            " points, above the cap of " + std::to_string(cap));

  PosteriorGrid g;
  g.states = states;
  g.resolution = resolution;
  g.points.reserve(count + 1);
  std::vector<int> counts(static_cast<std::size_t>(states), 0);
  emit_lattice(states, resolution, counts, 0, resolution, g.points);
  g.lattice_size = g.points.size();
  if (!on_lattice(prior, resolution)) g.points.push_back(prior);
  return g;
}

PosteriorGrid augment_grid(const PosteriorGrid& grid, const std::vector<Belief>& extra) {
  PosteriorGrid g = grid;
  for (const auto& x : extra) {
    if (x.dim() != g.states) throw std::invalid_argument("augment_grid: dimension mismatch");
    bool dup = false;
    for (const auto& p : g.points)
      if (p.distance_inf(x) <= kFeasibilityTol) {
        dup = true;
        break;
      }
    if (!dup) g.points.push_back(x);
  }
  return g;
}

}  // namespace voi
