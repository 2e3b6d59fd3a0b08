#include "ecut/construction.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include "ecut/error.hpp"
#include "ecut/graph_ops.hpp"

namespace ecut {

namespace {

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_common(const ConstructionParams& p) {
  if (p.h < 1) throw Error("h must be positive");
  if (p.L < 1) throw Error("L must be positive");
}

EigenOptions eig_options(const ConstructionParams& p) {
  EigenOptions eig;
  eig.threads = p.threads;
  return eig;
}

void check_L(const ConstructionParams& p, GraphMeta& meta, double gap1, double gap2) {
  const int bound = choose_L(gap1, gap2);
  meta.set("L_bound", std::to_string(bound));
  meta.set("override_L", p.override_L ? "1" : "0");
  if (!p.override_L && p.L < bound) {
    throw Error("L below the admissible bound " + std::to_string(bound) + " (set override_L)");
  }
}

void record_expander(GraphMeta& meta, const std::string& name, const CertifiedExpander& x) {
  meta.set(name + "_size", std::to_string(x.graph.vertex_count()));
  meta.set(name + "_degree", std::to_string(x.degree));
  meta.set(name + "_seed", std::to_string(x.seed_used));
  meta.set(name + "_gap", fmt_real(x.gap));
}

std::vector<VertexId> concat_leaves(const std::vector<TreeLayout>& layouts) {
  std::vector<VertexId> out;
  for (const auto& t : layouts) out.insert(out.end(), t.leaves.begin(), t.leaves.end());
  return out;
}

// FiveRegular skeleton; stretch_u decides path lengths inside the trees
// hanging from U.
LeveledGraph build_five_impl(const ConstructionParams& p, const StretchRule& stretch_u,
                             const std::string& variant) {
  check_common(p);
  if (p.truncate_forest && !p.override_L) throw Error("truncated builds require override_L");
  const auto eig = eig_options(p);
  const std::size_t a_size = 20 * ipow(4, p.h);
  const CertifiedExpander h1 = make_expander({3, a_size, p.min_gap, p.expander_seeds.first}, eig);
  std::optional<CertifiedExpander> h2;
  if (!p.truncate_forest) {
    h2 = make_expander({4, 20 * ipow(4, 3 * p.h), p.min_gap, p.expander_seeds.second}, eig);
  }

  GraphBuilder b;
  GraphMeta& meta = b.meta();
  meta.variant = variant;
  meta.h = p.h;
  meta.L = p.L;
  meta.set("expander_provider", "random-regular-pairing");
  record_expander(meta, "h1", h1);
  if (h2) record_expander(meta, "h2", *h2);
  check_L(p, meta, h1.gap, h2 ? h2->gap : 1.0);
  meta.set("leaf_level", std::to_string(3 * p.h + 2));

  const VertexId root = b.add_vertex(0, Role::TreeNode);
  const TreeLayout top = append_tree(b, root, 4, 2, 5, -1, nullptr, Role::TreeNode);

  std::vector<TreeLayout> u_trees;
  for (std::size_t i = 0; i < top.leaves.size(); ++i) {
    u_trees.push_back(append_tree(b, top.leaves[i], 4, p.h, 4, static_cast<std::int32_t>(i),
                                  stretch_u, Role::TreeNode));
  }
  for (std::size_t g = 0; g < 5; ++g) {
    std::vector<std::vector<VertexId>> aligned;
    for (std::size_t t = 4 * g; t < 4 * g + 4; ++t) aligned.push_back(u_trees[t].interiors);
    connect_counterparts(b, aligned, InterconnectMode::Clique);
  }

  const auto fixed_L = [L = p.L](std::int32_t) { return L; };
  const std::vector<VertexId> a_set = concat_leaves(u_trees);
  std::vector<TreeLayout> a_trees;
  a_trees.reserve(a_set.size());
  for (std::size_t k = 0; k < a_set.size(); ++k) {
    a_trees.push_back(append_tree(b, a_set[k], 4, p.h, 4, static_cast<std::int32_t>(20 + k),
                                  fixed_L, Role::TreeNode));
  }
  for (const auto& e : h1.graph.edges()) {
    const std::vector<VertexId> aligned[2] = {a_trees[e.u].interiors, a_trees[e.v].interiors};
    connect_counterparts(b, aligned, InterconnectMode::Matching);
  }
  const std::vector<VertexId> b_set = concat_leaves(a_trees);
  a_trees = {};

  if (p.truncate_forest) {
    meta.set("truncated", "1");
    meta.set("frontier_level", std::to_string(2 * p.h + 2));
    meta.set("forest_depth", std::to_string(p.h));
    meta.set("forest_branching", "4");
    return std::move(b).finish();
  }

  std::vector<VertexId> leaves;
  leaves.reserve(20 * ipow(4, 3 * p.h));
  for (VertexId r : b_set) {
    TreeLayout t = append_tree(b, r, 4, p.h, 4, -1, nullptr, Role::Leaf);
    leaves.insert(leaves.end(), t.leaves.begin(), t.leaves.end());
  }
  for (const auto& e : h2->graph.edges()) b.add_edge(leaves[e.u], leaves[e.v]);
  return std::move(b).finish();
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::FiveRegular: return "five";
    case Variant::Cubic: return "cubic";
    case Variant::NoCutoff: return "nocutoff";
    case Variant::Cylinder: return "cylinder";
  }
  return "none";
}

Variant parse_variant(const std::string& name) {
  if (name == "five" || name == "five-regular" || name == "FiveRegular") return Variant::FiveRegular;
  if (name == "cubic" || name == "Cubic") return Variant::Cubic;
  if (name == "nocutoff" || name == "no-cutoff" || name == "NoCutoff") return Variant::NoCutoff;
  if (name == "cylinder" || name == "Cylinder") return Variant::Cylinder;
  throw Error("unknown variant '" + name + "'");
}

int choose_L(double gap1, double gap2) {
  if (!(gap1 > 0) || !(gap2 > 0) || gap1 > 1 || gap2 > 1) throw Error("gap must lie in (0, 1]");
  const double x = std::max({2.0 / std::sqrt(gap1), 16.0 / gap2, 32.0});
  return static_cast<int>(std::ceil(x - 1e-12));
}

double theoretical_tstar(int h, int L) {
  return 5.0 / 3.0 * (5.0 * L * L - 3.0 * L + 1.0) * h;
}

LeveledGraph build_five_regular(const ConstructionParams& p) {
  if (p.variant != Variant::FiveRegular) throw Error("variant mismatch");
  return build_five_impl(p, [L = p.L](std::int32_t) { return L; }, "five");
}

LeveledGraph build_no_cutoff(const ConstructionParams& p) {
  if (p.variant != Variant::NoCutoff) throw Error("variant mismatch");
  check_common(p);
  if (p.L_prime <= p.L) throw Error("L' must exceed L");
  if (p.h % 2 != 0) throw Error("no-cutoff variant needs even h");
  const int half = p.h / 2;
  auto stretch = [half, L = p.L, Lp = p.L_prime](std::int32_t offset) {
    // Depth d starts at breadth-first offset (4^d - 1) / 3.
    std::int64_t start = 0;
    std::int64_t width = 1;
    int depth = 0;
    while (offset >= start + width) {
      start += width;
      width *= 4;
      ++depth;
    }
    if (depth <= half) return L;
    std::int64_t ancestor = offset - start;
    for (int d = depth; d > half; --d) ancestor /= 4;
    return ancestor % 2 == 1 ? Lp : L;
  };
  LeveledGraph g = build_five_impl(p, stretch, "nocutoff");
  GraphMeta meta = g.meta();
  meta.set("L_prime", std::to_string(p.L_prime));
  return g.with_meta(std::move(meta));
}

LeveledGraph build_cubic(const ConstructionParams& p) {
  if (p.variant != Variant::Cubic) throw Error("variant mismatch");
  check_common(p);
  const auto eig = eig_options(p);
  const CertifiedExpander h1 =
      make_expander({3, ipow(2, p.h + 2), p.min_gap, p.expander_seeds.first}, eig);
  const CertifiedExpander h2 =
      make_expander({3, ipow(2, 3 * p.h + 2), p.min_gap, p.expander_seeds.second}, eig);

  GraphBuilder b;
  GraphMeta& meta = b.meta();
  meta.variant = "cubic";
  meta.h = p.h;
  meta.L = p.L;
  meta.set("expander_provider", "random-regular-pairing");
  record_expander(meta, "h1", h1);
  record_expander(meta, "h2", h2);
  check_L(p, meta, h1.gap, h2.gap);
  meta.set("leaf_level", std::to_string(3 * p.h + 2));

  const VertexId root = b.add_vertex(0, Role::TreeNode);
  const TreeLayout top = append_tree(b, root, 2, 2, 3, -1, nullptr, Role::TreeNode);
  const auto fixed_L = [L = p.L](std::int32_t) { return L; };

  std::vector<TreeLayout> u_trees;
  for (std::size_t i = 0; i < top.leaves.size(); ++i) {
    u_trees.push_back(append_tree(b, top.leaves[i], 2, p.h, 2, static_cast<std::int32_t>(i),
                                  fixed_L, Role::TreeNode));
  }
  for (std::size_t g = 0; g < 3; ++g) {
    const std::vector<VertexId> aligned[2] = {u_trees[2 * g].interiors, u_trees[2 * g + 1].interiors};
    connect_counterparts(b, aligned, InterconnectMode::Matching);
  }

  const std::vector<VertexId> a_set = concat_leaves(u_trees);
  const auto h1_edges = h1.graph.edges();
  if (h1_edges.size() != a_set.size()) throw Error("H1 edge count does not match |A|");

  std::vector<TreeLayout> a_trees;
  for (std::size_t k = 0; k < a_set.size(); ++k) {
    a_trees.push_back(append_tree(b, a_set[k], 2, p.h, 2, static_cast<std::int32_t>(6 + k),
                                  fixed_L, Role::TreeNode));
  }
  // Pendant x' for every interior x; tree k stands for H1 edge k.
  const std::size_t classes = a_trees.front().interiors.size();
  std::vector<std::vector<VertexId>> primes(classes, std::vector<VertexId>(a_trees.size()));
  for (std::size_t k = 0; k < a_trees.size(); ++k) {
    for (std::size_t c = 0; c < classes; ++c) {
      const VertexId x = a_trees[k].interiors[c];
      const VertexId xp = b.add_vertex(b.level(x), Role::Auxiliary, b.provenance(x));
      b.add_edge(x, xp);
      primes[c][k] = xp;
    }
  }
  for (std::size_t c = 0; c < classes; ++c) attach_line_graph(b, h1.graph, primes[c]);

  std::vector<VertexId> leaves;
  for (const auto& t : a_trees) {
    for (VertexId r : t.leaves) {
      TreeLayout f = append_tree(b, r, 2, p.h, 2, -1, nullptr, Role::Leaf);
      leaves.insert(leaves.end(), f.leaves.begin(), f.leaves.end());
    }
  }
  if (h2.graph.edge_count() != leaves.size()) throw Error("H2 edge count does not match leaves");
  attach_line_graph(b, h2.graph, leaves);
  return std::move(b).finish();
}

LeveledGraph build(const ConstructionParams& p) {
  switch (p.variant) {
    case Variant::FiveRegular: return build_five_regular(p);
    case Variant::Cubic: return build_cubic(p);
    case Variant::NoCutoff: return build_no_cutoff(p);
    case Variant::Cylinder: {
      if (p.m < 4) throw Error("cylinder host needs m >= 4");
      const auto host =
          make_expander({3, static_cast<std::size_t>(p.m), p.min_gap, p.expander_seeds.first},
                        eig_options(p));
      LeveledGraph g = build_cylinder(host, p.L);
      GraphMeta meta = g.meta();
      record_expander(meta, "host", host);
      return g.with_meta(std::move(meta));
    }
  }
  throw Error("unknown variant");
}

}  // namespace ecut
