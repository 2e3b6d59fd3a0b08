#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecut/expanders.hpp"
#include "ecut/graph.hpp"

namespace ecut {

enum class Variant { FiveRegular, Cubic, NoCutoff, Cylinder };

std::string variant_name(Variant v);  // "five", "cubic", "nocutoff", "cylinder"
Variant parse_variant(const std::string& name);

struct ConstructionParams {
  int h = 1;
  int L = 2;
  Variant variant = Variant::FiveRegular;
  int L_prime = 0;  // NoCutoff only
  int m = 0;        // Cylinder only: host size
  std::pair<std::uint64_t, std::uint64_t> expander_seeds{1, 2};
  double min_gap = 0.05;
  // Permit L below choose_L of the certified gaps.
  bool override_L = false;
  // FiveRegular / NoCutoff: stop after level 2h+2. The unstretched forest
  // below and H2 are omitted; their shape is recorded in the metadata so that
  // hitting times can be completed exactly (see montecarlo).
  bool truncate_forest = false;
  int threads = 1;
};

int choose_L(double gap1, double gap2);

double theoretical_tstar(int h, int L);

LeveledGraph build_five_regular(const ConstructionParams& p);
LeveledGraph build_cubic(const ConstructionParams& p);
LeveledGraph build_no_cutoff(const ConstructionParams& p);
// Host must be 3-regular; L = 1 (mod 4).
LeveledGraph build_cylinder(const CertifiedExpander& host, int L);
LeveledGraph build_cylinder(const LeveledGraph& host, int L);

// Dispatches on p.variant. Cylinder draws a 3-regular host on p.m vertices
// with seed expander_seeds.first.
LeveledGraph build(const ConstructionParams& p);

// Cylinder gadget: 6(L-1)/4 interior vertices between two ports, arranged in
// sections of one ("S") or two ("P") vertices. Consecutive pairs are joined
// by parallel rails or, where crossed, by a complete bipartite K(2,2); pairs
// with rails on both sides carry a rung.
struct CylinderLayout {
  int L = 1;
  std::string sections;        // e.g. "SPPS"
  std::vector<bool> crossed;   // one flag per link between sections
  double passage_time = 1;     // exact expected port-to-port time
};

// The layout whose exact passage time is closest to L^2.
CylinderLayout cylinder_layout(int L);

// Standalone gadget: vertex 0 and the last vertex are the ports (degree 1),
// every other vertex has degree 3. Meta records port_a, port_b.
LeveledGraph cylinder_gadget(int L);
LeveledGraph cylinder_gadget(const CylinderLayout& layout);

// Exact expected hitting time from `from` to `to` (dense linear solve).
double exact_hitting_time(const LeveledGraph& g, VertexId from, VertexId to);

}  // namespace ecut
