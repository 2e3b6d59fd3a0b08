#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ecut {

using VertexId = std::uint32_t;

inline constexpr std::int32_t kUnleveled = -1;

enum class Role : std::uint8_t { TreeNode, PathInterior, Auxiliary, Leaf };

std::string_view role_name(Role role);
std::optional<Role> parse_role(std::string_view name);

// An undirected edge, always stored with u < v.
struct EdgeId {
  VertexId u = 0;
  VertexId v = 0;

  static EdgeId make(VertexId a, VertexId b) { return a < b ? EdgeId{a, b} : EdgeId{b, a}; }
  auto operator<=>(const EdgeId&) const = default;
};

// Construction coordinates. Vertices built inside copy number `tree` of a
// canonical tree share (offset, step) with their isomorphic counterparts in
// every other copy: tree nodes carry their breadth-first index with step 0,
// path interiors carry the offset of the deeper endpoint and their position
// counted from the shallower one.
struct Provenance {
  std::int32_t tree = -1;
  std::int32_t offset = -1;
  std::int32_t step = 0;

  auto operator<=>(const Provenance&) const = default;
};

// Ordered key=value provenance record plus the three header fields of the
// text format.
struct GraphMeta {
  std::string variant = "none";
  int h = 0;
  int L = 0;
  std::vector<std::pair<std::string, std::string>> entries;

  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  std::optional<long long> get_int(std::string_view key) const;

  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

// Immutable sparse undirected simple graph with a level map and role tags.
// Adjacency is stored as CSR with each neighbor list sorted ascending.
class LeveledGraph {
 public:
  LeveledGraph() = default;

  std::size_t vertex_count() const { return level_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  std::int32_t level(VertexId v) const { return level_[v]; }
  Role role(VertexId v) const { return role_[v]; }
  const Provenance& provenance(VertexId v) const { return provenance_[v]; }
  const GraphMeta& meta() const { return meta_; }

  // Edges in lexicographic (u, v) order.
  std::vector<EdgeId> edges() const;

  std::span<const std::uint64_t> csr_offsets() const { return offsets_; }
  std::span<const VertexId> csr_targets() const { return targets_; }
  std::span<const std::int32_t> levels() const { return level_; }
  std::span<const Role> roles() const { return role_; }

  // Same structure, different provenance record.
  LeveledGraph with_meta(GraphMeta meta) const;

  friend bool operator==(const LeveledGraph&, const LeveledGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::int32_t> level_;
  std::vector<Role> role_;
  std::vector<Provenance> provenance_;
  GraphMeta meta_;
};

// Mutable staging area for LeveledGraph. Edges are collected as a list and
// validated (self-loops immediately, duplicates at finish()).
class GraphBuilder {
 public:
  GraphBuilder() = default;
  // Copies vertices and all edges of g.
  explicit GraphBuilder(const LeveledGraph& g);

  VertexId add_vertex(std::int32_t level, Role role, Provenance provenance = {});
  void add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return level_.size(); }
  std::int32_t level(VertexId v) const { return level_[v]; }
  Role role(VertexId v) const { return role_[v]; }
  const Provenance& provenance(VertexId v) const { return provenance_[v]; }
  void set_role(VertexId v, Role role) { role_[v] = role; }

  const std::vector<EdgeId>& edge_list() const { return edges_; }
  // Removes every listed edge; throws "no such edge" for a missing one.
  void remove_edges(std::span<const EdgeId> doomed);

  GraphMeta& meta() { return meta_; }

  void reserve(std::size_t vertices, std::size_t edges);

  // Throws "duplicate edge u v" if the same pair was added twice.
  LeveledGraph finish() &&;

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::int32_t> level_;
  std::vector<Role> role_;
  std::vector<Provenance> provenance_;
  GraphMeta meta_;
};

}  // namespace ecut
