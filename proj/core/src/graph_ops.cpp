#include "ecut/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_map>

#include "ecut/error.hpp"

namespace ecut {

namespace {

std::int32_t lower_level(std::int32_t a, std::int32_t b) {
  if (a == kUnleveled || b == kUnleveled) return kUnleveled;
  return std::min(a, b);
}

}  // namespace

TreeLayout append_tree(GraphBuilder& b, VertexId root, int branching, int height, int root_degree,
                       std::int32_t tree_id, const StretchRule& stretch, Role leaf_role) {
  if (branching < 1 || root_degree < 1) throw Error("tree branching must be positive");
  if (height < 0) throw Error("tree height must be nonnegative");

  TreeLayout layout;
  layout.nodes.push_back(root);
  std::vector<int> depth{0};
  if (height == 0) {
    layout.leaves.push_back(root);
    return layout;
  }
  for (std::size_t i = 0; i < layout.nodes.size(); ++i) {
    if (depth[i] == height) {
      layout.leaves.push_back(layout.nodes[i]);
      continue;
    }
    const VertexId parent = layout.nodes[i];
    const std::int32_t parent_level = b.level(parent);
    const std::int32_t child_level = parent_level == kUnleveled ? kUnleveled : parent_level + 1;
    const int kids = depth[i] == 0 ? root_degree : branching;
    for (int c = 0; c < kids; ++c) {
      const auto child_offset = static_cast<std::int32_t>(layout.nodes.size());
      const int len = stretch ? stretch(child_offset) : 1;
      if (len < 1) throw Error("stretch length must be positive");
      VertexId prev = parent;
      for (int step = 1; step < len; ++step) {
        const VertexId x =
            b.add_vertex(parent_level, Role::PathInterior, {tree_id, child_offset, step});
        b.add_edge(prev, x);
        layout.interiors.push_back(x);
        prev = x;
      }
      const bool deepest = depth[i] + 1 == height;
      const VertexId child =
          b.add_vertex(child_level, deepest ? leaf_role : Role::TreeNode, {tree_id, child_offset, 0});
      b.add_edge(prev, child);
      layout.nodes.push_back(child);
      depth.push_back(depth[i] + 1);
    }
  }
  return layout;
}

void connect_counterparts(GraphBuilder& b, std::span<const std::vector<VertexId>> aligned,
                          InterconnectMode mode) {
  if (aligned.size() <= 1) return;
  if (mode == InterconnectMode::Matching && aligned.size() != 2) {
    throw Error("matching mode needs groups of two");
  }
  const std::size_t width = aligned.front().size();
  for (const auto& copy : aligned) {
    if (copy.size() != width) throw Error("group shape mismatch");
  }
  for (std::size_t i = 0; i < width; ++i) {
    for (std::size_t t = 0; t < aligned.size(); ++t) {
      for (std::size_t s = t + 1; s < aligned.size(); ++s) b.add_edge(aligned[t][i], aligned[s][i]);
    }
  }
}

std::vector<VertexId> attach_line_graph(GraphBuilder& b, const LeveledGraph& host,
                                        std::span<const VertexId> attach_by_edge) {
  if (!is_regular(host, 3)) throw Error("host is not 3-regular");
  const auto host_edges = host.edges();
  if (attach_by_edge.size() != host_edges.size()) throw Error("attachment mismatch");
  {
    std::vector<VertexId> sorted(attach_by_edge.begin(), attach_by_edge.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("attachment mismatch");
    }
    if (!sorted.empty() && sorted.back() >= b.vertex_count()) throw Error("attachment mismatch");
  }

  // incident[w] collects the attachment vertices of the three edges at w.
  std::vector<std::array<VertexId, 3>> incident(host.vertex_count());
  std::vector<int> fill(host.vertex_count(), 0);
  for (std::size_t k = 0; k < host_edges.size(); ++k) {
    const auto [u, v] = host_edges[k];
    incident[u][static_cast<std::size_t>(fill[u]++)] = attach_by_edge[k];
    incident[v][static_cast<std::size_t>(fill[v]++)] = attach_by_edge[k];
  }

  std::vector<VertexId> aux(host.vertex_count());
  for (VertexId w = 0; w < host.vertex_count(); ++w) {
    const auto& att = incident[w];
    const std::int32_t level =
        lower_level(lower_level(b.level(att[0]), b.level(att[1])), b.level(att[2]));
    aux[w] = b.add_vertex(level, Role::Auxiliary, {-1, static_cast<std::int32_t>(w), 0});
    for (VertexId x : att) b.add_edge(aux[w], x);
  }
  return aux;
}

LeveledGraph build_tree(int branching, int height, int root_degree) {
  GraphBuilder b;
  const VertexId root = b.add_vertex(0, height == 0 ? Role::Leaf : Role::TreeNode, {0, 0, 0});
  append_tree(b, root, branching, height, root_degree, 0, nullptr, Role::Leaf);
  return std::move(b).finish();
}

LeveledGraph stretch_edges(const LeveledGraph& g, std::span<const EdgeId> edges, int L) {
  if (L < 1) throw Error("stretch length must be positive");
  for (const auto& e : edges) {
    if (!g.has_edge(e.u, e.v)) throw Error("no such edge");
  }
  if (L == 1) return g;

  GraphBuilder b(g);
  b.remove_edges(edges);
  std::vector<EdgeId> ordered(edges.begin(), edges.end());
  for (auto& e : ordered) e = EdgeId::make(e.u, e.v);
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  for (const auto& e : ordered) {
    const auto& pu = g.provenance(e.u);
    const auto& pv = g.provenance(e.v);
    VertexId from = e.u;
    VertexId to = e.v;
    std::int32_t tree = -1;
    std::int32_t key = -1;
    if (pu.tree >= 0 && pu.tree == pv.tree && pu.step == 0 && pv.step == 0) {
      tree = pu.tree;
      if (pu.offset > pv.offset) std::swap(from, to);
      key = std::max(pu.offset, pv.offset);
    }
    const std::int32_t level = lower_level(g.level(e.u), g.level(e.v));
    VertexId prev = from;
    for (int step = 1; step < L; ++step) {
      const VertexId x = b.add_vertex(level, Role::PathInterior, {tree, key, step});
      b.add_edge(prev, x);
      prev = x;
    }
    b.add_edge(prev, to);
  }
  return std::move(b).finish();
}

LeveledGraph interconnect_interiors(const LeveledGraph& g,
                                    const std::vector<std::vector<std::int32_t>>& tree_groups,
                                    InterconnectMode mode) {
  // Interiors of each tree copy, ordered by their counterpart key.
  std::unordered_map<std::int32_t, std::vector<std::tuple<std::int32_t, std::int32_t, VertexId>>>
      by_tree;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.role(v) != Role::PathInterior) continue;
    const auto& p = g.provenance(v);
    if (p.tree >= 0) by_tree[p.tree].emplace_back(p.offset, p.step, v);
  }
  for (auto& [tree, list] : by_tree) std::sort(list.begin(), list.end());

  GraphBuilder b(g);
  for (const auto& group : tree_groups) {
    if (group.size() <= 1) continue;
    if (mode == InterconnectMode::Matching && group.size() != 2) {
      throw Error("matching mode needs groups of two");
    }
    std::vector<std::vector<VertexId>> aligned;
    const auto& reference = by_tree[group.front()];
    for (std::int32_t tree : group) {
      const auto& list = by_tree[tree];
      if (list.size() != reference.size()) throw Error("group shape mismatch");
      std::vector<VertexId> ids;
      ids.reserve(list.size());
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (std::get<0>(list[i]) != std::get<0>(reference[i]) ||
            std::get<1>(list[i]) != std::get<1>(reference[i])) {
          throw Error("group shape mismatch");
        }
        ids.push_back(std::get<2>(list[i]));
      }
      aligned.push_back(std::move(ids));
    }
    connect_counterparts(b, aligned, mode);
  }
  return std::move(b).finish();
}

LeveledGraph line_graph_embed(const LeveledGraph& g, const LeveledGraph& host,
                              const std::map<EdgeId, VertexId>& attach) {
  if (!is_regular(host, 3)) throw Error("host is not 3-regular");
  const auto host_edges = host.edges();
  if (attach.size() != host_edges.size()) throw Error("attachment mismatch");
  std::vector<VertexId> by_edge;
  by_edge.reserve(host_edges.size());
  for (const auto& e : host_edges) {
    auto it = attach.find(e);
    if (it == attach.end()) throw Error("attachment mismatch");
    by_edge.push_back(it->second);
  }
  GraphBuilder b(g);
  attach_line_graph(b, host, by_edge);
  return std::move(b).finish();
}

LeveledGraph contract_paths(const LeveledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> new_id(n, 0);
  GraphBuilder b;
  for (VertexId v = 0; v < n; ++v) {
    if (g.role(v) == Role::PathInterior) {
      if (g.degree(v) != 2) throw Error("cannot contract");
      continue;
    }
    new_id[v] = b.add_vertex(g.level(v), g.role(v), g.provenance(v));
  }

  std::vector<bool> visited(n, false);
  for (VertexId u = 0; u < n; ++u) {
    if (g.role(u) == Role::PathInterior) continue;
    for (VertexId w : g.neighbors(u)) {
      if (g.role(w) != Role::PathInterior) {
        if (u < w) b.add_edge(new_id[u], new_id[w]);
        continue;
      }
      VertexId prev = u;
      VertexId cur = w;
      while (g.role(cur) == Role::PathInterior) {
        visited[cur] = true;
        auto nb = g.neighbors(cur);
        const VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (cur == u) throw Error("cannot contract");
      if (u < cur) b.add_edge(new_id[u], new_id[cur]);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (g.role(v) == Role::PathInterior && !visited[v]) throw Error("cannot contract");
  }
  b.meta() = g.meta();
  return std::move(b).finish();
}

bool is_regular(const LeveledGraph& g, std::size_t d) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

std::vector<std::int64_t> bfs_distances(const LeveledGraph& g, VertexId source) {
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  if (source >= g.vertex_count()) throw Error("vertex out of range");
  std::vector<VertexId> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId u = frontier[head];
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const LeveledGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int64_t d) { return d < 0; });
}

bool has_odd_cycle(const LeveledGraph& g) {
  std::vector<std::int8_t> colour(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId v : g.neighbors(u)) {
        if (colour[v] < 0) {
          colour[v] = static_cast<std::int8_t>(1 - colour[u]);
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

std::map<std::int32_t, std::size_t> level_census(const LeveledGraph& g) {
  std::map<std::int32_t, std::size_t> census;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Role r = g.role(v);
    if ((r == Role::TreeNode || r == Role::Leaf) && g.level(v) != kUnleveled) ++census[g.level(v)];
  }
  return census;
}

}  // namespace ecut
