#pragma once

#include <cstdint>

#include "ecut/eigensolvers.hpp"
#include "ecut/graph.hpp"

namespace ecut {

struct ExpanderSpec {
  int degree = 3;
  std::size_t size = 0;
  double min_gap = 0.05;
  std::uint64_t seed = 1;
  int max_attempts = 64;  // seeds tried: seed, seed+1, ...
};

struct CertifiedExpander {
  LeveledGraph graph;  // unleveled, roles TreeNode
  double lambda = 0;   // largest |nontrivial adjacency eigenvalue|
  double gap = 0;      // 1 - lambda / degree
  int degree = 0;
  std::uint64_t seed_used = 0;
};

// Uniformly paired random d-regular simple graph (sequential pairing with
// restarts). Deterministic in (degree, size, seed).
LeveledGraph random_regular_graph(int degree, std::size_t size, std::uint64_t seed);

// Builds random regular graphs with consecutive seeds until one is connected
// with certified gap >= min_gap. Throws "no expander found for spec".
CertifiedExpander make_expander(const ExpanderSpec& spec, const EigenOptions& eig = {});

// 1 - lambda/degree for a connected degree-regular graph.
double certify_gap(const LeveledGraph& g, int degree, const EigenOptions& eig = {});

// Largest absolute nontrivial adjacency eigenvalue of a connected
// degree-regular graph.
double nontrivial_lambda(const LeveledGraph& g, int degree, const EigenOptions& eig = {});

}  // namespace ecut
