#include "ecut/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "ecut/error.hpp"
#include "ecut/graph_ops.hpp"

namespace ecut {

double cheeger_bruteforce(const LeveledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 24) throw Error("brute force bound exceeded");
  if (n < 2) throw Error("cheeger constant needs at least two vertices");
  std::vector<std::uint32_t> nb(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) nb[u] |= 1u << v;
  }
  // Vertex n-1 stays outside S; every cut is seen once.
  const std::uint32_t total = 1u << (n - 1);
  std::uint32_t set = 0;
  std::int64_t boundary = 0;
  int size = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t k = 1; k < total; ++k) {
    const int v = std::countr_zero(k);
    const std::uint32_t bit = 1u << v;
    const int inside = std::popcount(nb[static_cast<std::size_t>(v)] & set & ~bit);
    const int deg = std::popcount(nb[static_cast<std::size_t>(v)]);
    if (set & bit) {
      set &= ~bit;
      boundary -= deg - 2 * inside;
      --size;
    } else {
      set |= bit;
      boundary += deg - 2 * inside;
      ++size;
    }
    const int smaller = std::min<int>(size, static_cast<int>(n) - size);
    best = std::min(best, static_cast<double>(boundary) / smaller);
  }
  return best;
}

CheegerBounds cheeger_bounds(const LeveledGraph& g, int d, const EigenOptions& eig) {
  if (!is_regular(g, static_cast<std::size_t>(d))) throw Error("graph is not d-regular");
  const double lambda = walk_spectrum_edges(g, eig).abs_max() * d;
  CheegerBounds out;
  const double slack = std::max(0.0, d - lambda);
  out.degenerate = slack < 1e-9 * d;
  if (out.degenerate) return out;
  out.lower = slack / 2;
  out.upper = std::sqrt(2.0 * d * slack);
  return out;
}

double dirichlet_gap_upper(const LeveledGraph& g, std::span<const double> f) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n) throw Error("test function size mismatch");
  const double two_e = static_cast<double>(2 * g.edge_count());
  if (two_e == 0) throw Error("graph has no edges");
  double energy = 0;
  double mean = 0;
  for (VertexId u = 0; u < n; ++u) {
    const double pi = static_cast<double>(g.degree(u)) / two_e;
    mean += pi * f[u];
    for (VertexId v : g.neighbors(u)) {
      if (u < v) energy += (f[u] - f[v]) * (f[u] - f[v]);
    }
  }
  double var = 0;
  double scale = 0;
  for (VertexId u = 0; u < n; ++u) {
    const double pi = static_cast<double>(g.degree(u)) / two_e;
    var += pi * (f[u] - mean) * (f[u] - mean);
    scale = std::max(scale, std::abs(f[u]));
  }
  if (var <= 1e-24 * std::max(1.0, scale * scale)) throw Error("zero variance");
  return energy / two_e / var;
}

std::vector<double> distance_test_function(const LeveledGraph& g, VertexId x) {
  const auto dist = bfs_distances(g, x);
  std::vector<double> f(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] < 0) throw Error("graph is disconnected");
    f[i] = static_cast<double>(dist[i]);
  }
  return f;
}

double walk_spectral_gap(const LeveledGraph& g, const EigenOptions& eig) {
  return 1.0 - walk_spectrum_edges(g, eig).second;
}

NoCutoffCertificate no_cutoff_certificate(const LeveledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error("certificate needs at least two vertices");
  auto farthest = [&](VertexId s) {
    const auto d = bfs_distances(g, s);
    if (std::any_of(d.begin(), d.end(), [](std::int64_t x) { return x < 0; })) {
      throw Error("graph is disconnected");
    }
    const auto it = std::max_element(d.begin(), d.end());
    return std::pair<VertexId, std::int64_t>{static_cast<VertexId>(it - d.begin()), *it};
  };

  NoCutoffCertificate out;
  if (n <= 500) {
    out.exhaustive = true;
    for (VertexId v = 0; v < n; ++v) {
      const auto [w, ecc] = farthest(v);
      if (ecc > out.eccentricity) {
        out.eccentricity = ecc;
        out.source = v;
      }
    }
  } else {
    const auto [a, ecc0] = farthest(0);
    const auto [b, ecc_a] = farthest(a);
    const auto [c, ecc_b] = farthest(b);
    (void)ecc0;
    (void)c;
    out.source = ecc_b > ecc_a ? b : a;
    out.eccentricity = std::max(ecc_a, ecc_b);
  }

  const auto f = distance_test_function(g, out.source);
  out.gap_upper = dirichlet_gap_upper(g, f);
  out.scaled = out.gap_upper * static_cast<double>(n) * static_cast<double>(n);

  const std::int64_t N = out.eccentricity;
  const double two_e = static_cast<double>(2 * g.edge_count());
  for (VertexId v = 0; v < n; ++v) {
    const double pi = static_cast<double>(g.degree(v)) / two_e;
    const auto fv = static_cast<std::int64_t>(f[v]);
    if (fv <= N / 4) out.mass_low += pi;
    if (fv >= (3 * N + 3) / 4) out.mass_high += pi;
  }
  out.c = static_cast<double>(N) / static_cast<double>(n);
  out.diameter_linear = N >= 4;
  out.discrepancy_ok = out.mass_low >= out.c / 4 && out.mass_high >= out.c / 4;
  if (!out.diameter_linear) out.note = "diameter not linear";
  return out;
}

SpectralReport spectral_report(const LeveledGraph& g, const SpectralOptions& opt) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error("spectral report needs at least two vertices");
  const auto d = static_cast<int>(g.degree(0));
  if (!is_regular(g, static_cast<std::size_t>(d))) throw Error("graph is not regular");
  if (!is_connected(g)) throw Error("graph is disconnected");

  const auto edges = walk_spectrum_edges(g, opt.eig);
  SpectralReport r;
  r.n = n;
  r.degree = d;
  r.lambda2 = edges.abs_max() * d;
  r.lambda_second = edges.second * d;
  r.gap = 1.0 - edges.abs_max();
  r.walk_gap = 1.0 - edges.second;
  r.bipartite = !has_odd_cycle(g);
  r.lazy_walk_gap = r.walk_gap / 2;
  r.cheeger_lower = std::max(0.0, d - r.lambda2) / 2;
  r.cheeger_upper = std::sqrt(2.0 * d * std::max(0.0, d - r.lambda_second));
  if (opt.cheeger_exact && n <= 24) r.cheeger_exact = cheeger_bruteforce(g);
  if (opt.dirichlet) {
    r.certificate = no_cutoff_certificate(g);
    r.dirichlet_upper = r.certificate->gap_upper;
  }
  return r;
}

}  // namespace ecut
