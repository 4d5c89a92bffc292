#pragma once

// Qubit sites and coupling bonds.  Site ordering is row-major: on a
// rows x cols grid, site (r, c) has index r*cols + c.

#include <stdexcept>
#include <utility>
#include <vector>

namespace slqa {

struct LatticeGraph {
  int n_sites = 0;
  std::vector<std::pair<int, int>> bonds;  // unordered pairs, stored (lo, hi)

  void validate() const {
    std::vector<std::pair<int, int>> seen;
    for (const auto& [j, k] : bonds) {
      if (j == k) throw std::invalid_argument("LatticeGraph: self-loop");
      if (j < 0 || k < 0 || j >= n_sites || k >= n_sites)
        throw std::out_of_range("LatticeGraph: site index out of range");
      auto lo = std::min(j, k), hi = std::max(j, k);
      for (const auto& b : seen)
        if (b.first == lo && b.second == hi)
          throw std::invalid_argument("LatticeGraph: duplicate bond");
      seen.emplace_back(lo, hi);
    }
  }
};

// Nearest-neighbour bonds on a rows x cols grid.  Open boundaries by default;
// periodic wrap-around is available but unused by the shipped experiments.
inline LatticeGraph square_lattice(int rows, int cols, bool periodic = false) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("square_lattice: dimensions must be positive");
  LatticeGraph g;
  g.n_sites = rows * cols;
  auto idx = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols)
        g.bonds.emplace_back(idx(r, c), idx(r, c + 1));
      else if (periodic && cols > 2)
        g.bonds.emplace_back(idx(r, 0), idx(r, c));
      if (r + 1 < rows)
        g.bonds.emplace_back(idx(r, c), idx(r + 1, c));
      else if (periodic && rows > 2)
        g.bonds.emplace_back(idx(0, c), idx(r, c));
    }
  }
  g.validate();
  return g;
}

}  // namespace slqa
