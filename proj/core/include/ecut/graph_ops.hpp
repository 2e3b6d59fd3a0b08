#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ecut/graph.hpp"

namespace ecut {

enum class InterconnectMode { Clique, Matching };

/// Rooted tree: the root has `root_degree` children, every other internal
/// node has `branching` children. Levels are depths; the deepest level is
/// tagged Leaf. Height 0 yields a single vertex.
LeveledGraph build_tree(int branching, int height, int root_degree);

/// Replaces each listed edge by a path of length L. New vertices are
/// PathInterior and sit at the smaller endpoint level. L == 1 is the identity.
LeveledGraph stretch_edges(const LeveledGraph& g, std::span<const EdgeId> edges, int L);

/// For every group of tree copies, joins isomorphic PathInterior vertices
/// (same provenance offset/step) by a clique or, for pairs, a single edge.
LeveledGraph interconnect_interiors(const LeveledGraph& g,
                                    const std::vector<std::vector<std::int32_t>>& tree_groups,
                                    InterconnectMode mode);

/// Adds one Auxiliary vertex per vertex w of the 3-regular `host`, joined to
/// the attachment vertices of the three host edges at w.
LeveledGraph line_graph_embed(const LeveledGraph& g, const LeveledGraph& host,
                              const std::map<EdgeId, VertexId>& attach);

/// Collapses every maximal chain of degree-2 PathInterior vertices into one
/// edge between its endpoints. Remaining vertices keep their relative order.
LeveledGraph contract_paths(const LeveledGraph& g);

bool is_regular(const LeveledGraph& g, std::size_t d);

// Traversal helpers.
std::vector<std::int64_t> bfs_distances(const LeveledGraph& g, VertexId source);
bool is_connected(const LeveledGraph& g);
bool has_odd_cycle(const LeveledGraph& g);

// Sizes of the level sets, counting tree nodes and leaves only (interiors
// and auxiliaries are not part of any level set).
std::map<std::int32_t, std::size_t> level_census(const LeveledGraph& g);

// ---------------------------------------------------------------------------
// Builder-level primitives shared by the public operations and the
// constructions.

struct TreeLayout {
  std::vector<VertexId> nodes;      // breadth-first, nodes[0] is the root
  std::vector<VertexId> interiors;  // ordered by (deeper endpoint offset, step)
  std::vector<VertexId> leaves;     // deepest level, left to right
};

// Stretch length of the edge whose deeper endpoint has the given offset.
using StretchRule = std::function<int(std::int32_t child_offset)>;

TreeLayout append_tree(GraphBuilder& b, VertexId root, int branching, int height, int root_degree,
                       std::int32_t tree_id, const StretchRule& stretch, Role leaf_role);

// aligned[t][i] are counterparts across copies t. Clique mode joins every
// pair; matching mode requires exactly two copies.
void connect_counterparts(GraphBuilder& b, std::span<const std::vector<VertexId>> aligned,
                          InterconnectMode mode);

// attach_by_edge[k] is the attachment vertex of host.edges()[k]. Returns the
// auxiliary vertices, indexed by host vertex. Each auxiliary sits at the
// lowest level among its three attachments.
std::vector<VertexId> attach_line_graph(GraphBuilder& b, const LeveledGraph& host,
                                        std::span<const VertexId> attach_by_edge);

}  // namespace ecut
