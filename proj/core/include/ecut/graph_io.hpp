#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ecut/graph.hpp"

namespace ecut {

// Text edge-list format:
//
//   # key=value          (zero or more provenance lines)
//   ev <n> <m> <h> <L> <variant>
//   u v                  (m lines, u < v, lexicographic)
//   levels
//   v level role         (n lines; level -1 means unleveled)
//
// Output is a pure function of the graph, so equal graphs serialize to
// identical bytes.
void write_graph(std::ostream& out, const LeveledGraph& g);
std::string serialize_graph(const LeveledGraph& g);

// Throws Error("malformed graph file: ...") on any syntax or consistency
// problem.
LeveledGraph read_graph(std::istream& in);
LeveledGraph parse_graph(const std::string& text);

void write_graph_file(const std::filesystem::path& path, const LeveledGraph& g);
LeveledGraph read_graph_file(const std::filesystem::path& path);

}  // namespace ecut
