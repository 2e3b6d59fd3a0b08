#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecut/eigensolvers.hpp"
#include "ecut/graph.hpp"

namespace ecut {

// Exact edge expansion min |dS| / min(|S|, |V \ S|) by Gray-code enumeration.
// Limited to 24 vertices ("brute force bound exceeded").
double cheeger_bruteforce(const LeveledGraph& g);

struct CheegerBounds {
  double lower = 0;
  double upper = 0;
  bool degenerate = false;  // lambda == d: periodic walk, bounds collapse
};

// ((d - lambda)/2, sqrt(2d(d - lambda))) with lambda the largest absolute
// nontrivial adjacency eigenvalue.
CheegerBounds cheeger_bounds(const LeveledGraph& g, int d, const EigenOptions& eig = {});

// E(f) / Var_pi(f) for the simple random walk.
double dirichlet_gap_upper(const LeveledGraph& g, std::span<const double> f);

std::vector<double> distance_test_function(const LeveledGraph& g, VertexId x);

// 1 - (largest nontrivial eigenvalue of P), signed.
double walk_spectral_gap(const LeveledGraph& g, const EigenOptions& eig = {});

struct NoCutoffCertificate {
  VertexId source = 0;
  std::int64_t eccentricity = 0;  // N = max_v dist(source, v)
  bool exhaustive = false;        // source chosen over all vertices
  double gap_upper = 0;
  double scaled = 0;      // gap_upper * n^2
  double mass_low = 0;    // pi(f <= floor(N/4))
  double mass_high = 0;   // pi(f >= ceil(3N/4))
  double c = 0;           // N / n
  bool diameter_linear = false;
  bool discrepancy_ok = false;
  std::string note;
};

NoCutoffCertificate no_cutoff_certificate(const LeveledGraph& g);

struct SpectralOptions {
  EigenOptions eig;
  bool cheeger_exact = true;    // only attempted when n <= 24
  bool dirichlet = true;
};

struct SpectralReport {
  std::size_t n = 0;
  int degree = 0;
  double lambda2 = 0;         // largest |nontrivial adjacency eigenvalue|
  double lambda_second = 0;   // largest nontrivial adjacency eigenvalue, signed
  double gap = 0;             // 1 - lambda2 / d
  double walk_gap = 0;        // 1 - lambda_second / d
  bool bipartite = false;
  double lazy_walk_gap = 0;   // gap of (I + P)/2
  std::optional<double> cheeger_exact;
  double cheeger_lower = 0;   // (d - lambda2)/2
  double cheeger_upper = 0;   // sqrt(2d(d - lambda_second))
  std::optional<double> dirichlet_upper;
  std::optional<NoCutoffCertificate> certificate;
};

// Requires a connected regular graph.
SpectralReport spectral_report(const LeveledGraph& g, const SpectralOptions& opt = {});

}  // namespace ecut
