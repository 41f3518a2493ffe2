#pragma once

#include <cmath>
#include <vector>

namespace voi {

// Solves the square system A x = b by Gaussian elimination with partial
// pivoting. Returns false when a pivot falls below `tol` (singular system).
// Kept separate from the simplex on purpose: the enumeration oracles must
// not share a code path with the LP solver they check.
inline bool solve_linear_system(std::vector<std::vector<double>> a, std::vector<double> b,
                                std::vector<double>& x, double tol = 1e-11) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::fabs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
        piv = r;
    if (std::fabs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) < tol) return false;
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
    std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(piv)]);
    const double inv = 1.0 / a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int r = col + 1; r < n; ++r) {
      const double f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
    }
  }
  x.assign(static_cast<std::size_t>(n), 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[static_cast<std::size_t>(r)];
    for (int j = r + 1; j < n; ++j)
      s -= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(r)] = s / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }
  return true;
}

}  // namespace voi
