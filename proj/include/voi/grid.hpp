#pragma once

#include <cstddef>
#include <vector>

#include "voi/types.hpp"

namespace voi {

// Barycentric lattice over the simplex: all beliefs whose coordinates are
// multiples of 1/k, plus the prior when it is off-lattice. Deterministic
// ordering throughout.
struct PosteriorGrid {
  int states = 0;
  int resolution = 0;
  std::vector<Belief> points;
  std::size_t lattice_size = 0;  // points[0..lattice_size) is the raw lattice
};

inline constexpr std::size_t kDefaultGridCap = 200000;

PosteriorGrid make_grid(int states, int resolution, const Belief& prior,
                        std::size_t cap = kDefaultGridCap);

// Returns a copy of the grid with extra beliefs appended (deduplicated at
// feasibility tolerance). Used to pin decision-region corner beliefs onto
// the grid so flat segments resolve exactly.
PosteriorGrid augment_grid(const PosteriorGrid& grid, const std::vector<Belief>& extra);

// Default lattice resolution per state count (2 -> 1000, 3 -> 120, 4 -> 40).
int default_resolution(int states);

}  // namespace voi
