#include "ecut/graph.hpp"

#include <algorithm>
#include <charconv>

#include "ecut/error.hpp"

namespace ecut {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::TreeNode: return "tree";
    case Role::PathInterior: return "interior";
    case Role::Auxiliary: return "aux";
    case Role::Leaf: return "leaf";
  }
  return "tree";
}

std::optional<Role> parse_role(std::string_view name) {
  if (name == "tree") return Role::TreeNode;
  if (name == "interior") return Role::PathInterior;
  if (name == "aux") return Role::Auxiliary;
  if (name == "leaf") return Role::Leaf;
  return std::nullopt;
}

void GraphMeta::set(std::string key, std::string value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> GraphMeta::get(std::string_view key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<long long> GraphMeta::get_int(std::string_view key) const {
  auto s = get(key);
  if (!s) return std::nullopt;
  long long out = 0;
  auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), out);
  if (ec != std::errc{} || ptr != s->data() + s->size()) return std::nullopt;
  return out;
}

bool LeveledGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<EdgeId> LeveledGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

LeveledGraph LeveledGraph::with_meta(GraphMeta meta) const {
  LeveledGraph copy = *this;
  copy.meta_ = std::move(meta);
  return copy;
}

GraphBuilder::GraphBuilder(const LeveledGraph& g)
    : edges_(g.edges()),
      level_(g.level_),
      role_(g.role_),
      provenance_(g.provenance_),
      meta_(g.meta_) {}

VertexId GraphBuilder::add_vertex(std::int32_t level, Role role, Provenance provenance) {
  level_.push_back(level);
  role_.push_back(role);
  provenance_.push_back(provenance);
  return static_cast<VertexId>(level_.size() - 1);
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count()) throw Error("edge endpoint out of range");
  edges_.push_back(EdgeId::make(u, v));
}

void GraphBuilder::remove_edges(std::span<const EdgeId> doomed) {
  std::vector<EdgeId> sorted_doomed(doomed.begin(), doomed.end());
  for (auto& e : sorted_doomed) e = EdgeId::make(e.u, e.v);
  std::sort(sorted_doomed.begin(), sorted_doomed.end());
  sorted_doomed.erase(std::unique(sorted_doomed.begin(), sorted_doomed.end()), sorted_doomed.end());

  std::vector<bool> found(sorted_doomed.size(), false);
  std::vector<EdgeId> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    auto it = std::lower_bound(sorted_doomed.begin(), sorted_doomed.end(), e);
    if (it != sorted_doomed.end() && *it == e) {
      found[static_cast<std::size_t>(it - sorted_doomed.begin())] = true;
    } else {
      kept.push_back(e);
    }
  }
  for (bool f : found) {
    if (!f) throw Error("no such edge");
  }
  edges_ = std::move(kept);
}

void GraphBuilder::reserve(std::size_t vertices, std::size_t edges) {
  level_.reserve(vertices);
  role_.reserve(vertices);
  provenance_.reserve(vertices);
  edges_.reserve(edges);
}

LeveledGraph GraphBuilder::finish() && {
  LeveledGraph g;
  const std::size_t n = level_.size();
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges_) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }
  edges_.clear();
  edges_.shrink_to_fit();
  cursor.clear();
  cursor.shrink_to_fit();

  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw Error("duplicate edge " + std::to_string(v) + " " + std::to_string(*dup));
    }
  }
  g.level_ = std::move(level_);
  g.role_ = std::move(role_);
  g.provenance_ = std::move(provenance_);
  g.meta_ = std::move(meta_);
  return g;
}

}  // namespace ecut
