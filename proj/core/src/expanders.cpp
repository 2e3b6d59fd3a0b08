#include "ecut/expanders.hpp"

#include <algorithm>
#include <string>

#include "ecut/error.hpp"
#include "ecut/graph_ops.hpp"
#include "ecut/rng.hpp"

namespace ecut {

namespace {

void validate(int degree, std::size_t size) {
  if (degree < 1) throw Error("expander degree must be positive");
  if ((static_cast<std::size_t>(degree) * size) % 2 != 0) {
    throw Error("degree times size must be even");
  }
  if (size < static_cast<std::size_t>(degree) + 1) throw Error("expander size must exceed degree");
}

LeveledGraph complete_graph(std::size_t size) {
  GraphBuilder b;
  for (std::size_t v = 0; v < size; ++v) b.add_vertex(kUnleveled, Role::TreeNode);
  for (VertexId u = 0; u < size; ++u) {
    for (VertexId v = u + 1; v < size; ++v) b.add_edge(u, v);
  }
  return std::move(b).finish();
}

// One pairing attempt; false when it gets stuck.
bool try_pairing(int degree, std::size_t size, CounterRng& rng, std::vector<EdgeId>& edges) {
  const auto d = static_cast<std::size_t>(degree);
  std::vector<VertexId> points(size * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<VertexId>(i / d);
  std::vector<VertexId> adj(size * d);
  std::vector<std::uint8_t> fill(size, 0);
  auto adjacent = [&](VertexId a, VertexId b) {
    const VertexId* first = adj.data() + static_cast<std::size_t>(a) * d;
    return std::find(first, first + fill[a], b) != first + fill[a];
  };

  edges.clear();
  std::size_t live = points.size();
  std::size_t failures = 0;
  while (live > 0) {
    const std::size_t i = rng.below(live);
    std::size_t j = rng.below(live - 1);
    if (j >= i) ++j;
    const VertexId a = points[i];
    const VertexId b = points[j];
    if (a == b || adjacent(a, b)) {
      if (++failures > 64 * live + 1024) return false;
      continue;
    }
    failures = 0;
    adj[static_cast<std::size_t>(a) * d + fill[a]++] = b;
    adj[static_cast<std::size_t>(b) * d + fill[b]++] = a;
    edges.push_back(EdgeId::make(a, b));
    // Remove the two points, larger index first.
    const std::size_t hi = std::max(i, j);
    const std::size_t lo = std::min(i, j);
    points[hi] = points[--live];
    points[lo] = points[--live];
  }
  return true;
}

}  // namespace

LeveledGraph random_regular_graph(int degree, std::size_t size, std::uint64_t seed) {
  validate(degree, size);
  if (size == static_cast<std::size_t>(degree) + 1) return complete_graph(size);
  std::vector<EdgeId> edges;
  for (std::uint64_t restart = 0; restart < 10000; ++restart) {
    CounterRng rng(seed, restart);
    if (!try_pairing(degree, size, rng, edges)) continue;
    std::sort(edges.begin(), edges.end());
    GraphBuilder b;
    b.reserve(size, edges.size());
    for (std::size_t v = 0; v < size; ++v) b.add_vertex(kUnleveled, Role::TreeNode);
    for (const auto& e : edges) b.add_edge(e.u, e.v);
    return std::move(b).finish();
  }
  throw Error("pairing failed to produce a simple graph");
}

double nontrivial_lambda(const LeveledGraph& g, int degree, const EigenOptions& eig) {
  if (!is_regular(g, static_cast<std::size_t>(degree))) throw Error("graph is not degree-regular");
  if (!is_connected(g)) throw Error("graph is disconnected");
  return walk_spectrum_edges(g, eig).abs_max() * degree;
}

double certify_gap(const LeveledGraph& g, int degree, const EigenOptions& eig) {
  return 1.0 - nontrivial_lambda(g, degree, eig) / degree;
}

CertifiedExpander make_expander(const ExpanderSpec& spec, const EigenOptions& eig) {
  validate(spec.degree, spec.size);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(attempt);
    LeveledGraph g = random_regular_graph(spec.degree, spec.size, seed);
    if (!is_connected(g)) continue;
    const double lambda = nontrivial_lambda(g, spec.degree, eig);
    const double gap = 1.0 - lambda / spec.degree;
    if (gap < spec.min_gap) continue;

    GraphMeta meta;
    meta.set("generator", "random-regular-pairing");
    meta.set("degree", std::to_string(spec.degree));
    meta.set("size", std::to_string(spec.size));
    meta.set("seed", std::to_string(seed));
    CertifiedExpander out;
    out.graph = g.with_meta(std::move(meta));
    out.lambda = lambda;
    out.gap = gap;
    out.degree = spec.degree;
    out.seed_used = seed;
    return out;
  }
  throw Error("no expander found for spec");
}

}  // namespace ecut
