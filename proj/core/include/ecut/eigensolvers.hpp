#pragma once

#include <cstddef>
#include <vector>

#include "ecut/graph.hpp"

namespace ecut {

struct EigenOptions {
  std::size_t dense_limit = 2000;  // dense solver at or below this many vertices
  double tol = 1e-10;              // residual tolerance on the walk scale
  std::size_t max_iterations = 100000;
  bool force_iterative = false;
  int threads = 1;
};

// Extreme nontrivial eigenvalues of the walk matrix P = D^-1 A (equivalently
// of D^-1/2 A D^-1/2), i.e. after removing the stationary direction.
struct WalkSpectrumEdges {
  double second = 0;    // largest nontrivial eigenvalue, signed
  double smallest = 0;  // most negative eigenvalue
  std::size_t iterations = 0;
  bool dense = true;

  double abs_max() const;
};

WalkSpectrumEdges walk_spectrum_edges(const LeveledGraph& g, const EigenOptions& opt = {});

// Full adjacency spectrum in ascending order (dense, for small graphs).
std::vector<double> adjacency_spectrum(const LeveledGraph& g);

}  // namespace ecut
