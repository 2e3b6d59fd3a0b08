#include "ecut/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "ecut/error.hpp"

namespace ecut {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error("malformed graph file: " + why); }

}  // namespace

void write_graph(std::ostream& out, const LeveledGraph& g) {
  const auto& meta = g.meta();
  for (const auto& [k, v] : meta.entries) out << "# " << k << '=' << v << '\n';
  out << "ev " << g.vertex_count() << ' ' << g.edge_count() << ' ' << meta.h << ' ' << meta.L << ' '
      << meta.variant << '\n';
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  out << "levels\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << v << ' ' << g.level(v) << ' ' << role_name(g.role(v)) << '\n';
  }
}

std::string serialize_graph(const LeveledGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

LeveledGraph read_graph(std::istream& in) {
  GraphMeta meta;
  std::string line;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) malformed("provenance line without '='");
      meta.set(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    std::istringstream hdr(line);
    std::string tag;
    hdr >> tag >> n >> m >> meta.h >> meta.L >> meta.variant;
    if (tag != "ev" || hdr.fail()) malformed("bad header");
    have_header = true;
    break;
  }
  if (!have_header) malformed("missing header");

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(in, line)) malformed("truncated edge list");
    std::istringstream row(line);
    unsigned long long u = 0;
    unsigned long long v = 0;
    if (!(row >> u >> v) || u >= v || v >= n) malformed("bad edge line '" + line + "'");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (!std::getline(in, line) || line != "levels") malformed("missing levels section");

  GraphBuilder b;
  b.reserve(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) malformed("truncated levels section");
    std::istringstream row(line);
    unsigned long long v = 0;
    long long level = 0;
    std::string role_text;
    if (!(row >> v >> level >> role_text) || v != i) malformed("bad level line '" + line + "'");
    auto role = parse_role(role_text);
    if (!role) malformed("unknown role '" + role_text + "'");
    b.add_vertex(static_cast<std::int32_t>(level), *role);
  }
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  b.meta() = std::move(meta);
  return std::move(b).finish();
}

LeveledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph_file(const std::filesystem::path& path, const LeveledGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_graph(out, g);
  if (!out) throw Error("write failed: " + path.string());
}

LeveledGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_graph(in);
}

}  // namespace ecut
