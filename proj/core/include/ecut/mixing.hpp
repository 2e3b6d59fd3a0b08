#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecut/graph.hpp"

namespace ecut {

using DistVector = std::vector<double>;

// Walk kernel with precomputed inverse degrees. Each destination pulls from
// its neighbors, so rows are independent and can be split across threads.
class WalkOperator {
 public:
  WalkOperator(const LeveledGraph& g, double laziness, int threads = 1);

  void apply(const DistVector& in, DistVector& out) const;
  const LeveledGraph& graph() const { return *g_; }
  double laziness() const { return laziness_; }

 private:
  const LeveledGraph* g_;
  double laziness_;
  int threads_;
  std::vector<double> inv_deg_;
};

DistVector step(const LeveledGraph& g, const DistVector& p, double laziness);

// 1/2 sum |p(v) - 1/n|.
double tv_to_uniform(const DistVector& p);
// 1/2 sum |p(v) - deg(v)/2|E||; equals tv_to_uniform on regular graphs.
double tv_to_stationary(const LeveledGraph& g, const DistVector& p);

DistVector point_mass(std::size_t n, VertexId v);

struct TVProfile {
  VertexId start = 0;
  std::vector<std::int64_t> times;
  std::vector<double> tv;
  double laziness = 0;
  std::int64_t stride = 1;
  std::size_t renormalizations = 0;
};

struct ProfileOptions {
  std::int64_t t_max = 1000;
  std::int64_t stride = 0;  // 0: max(1, t_max / 2000)
  double laziness = 0;
  double stop_below = 0;    // stop after the first sample with tv below this
  int threads = 1;
};

std::int64_t default_stride(std::int64_t t_max);

TVProfile tv_profile(const LeveledGraph& g, VertexId start, const ProfileOptions& opt);

struct Crossing {
  std::int64_t t = 0;         // first sampled time with tv < eps
  std::int64_t previous = 0;  // preceding sampled time (t itself when first)
};

Crossing mixing_crossing(const TVProfile& profile, double eps);
// Throws "not mixed by t_max".
std::int64_t mixing_time(const TVProfile& profile, double eps);

struct MixingSummary {
  VertexId start = 0;
  std::string label;
  std::map<double, std::int64_t> tmix;
  std::map<double, Crossing> brackets;
  double cutoff_ratio = 0;           // tmix(1/4) / tmix(3/4)
  std::int64_t window_estimate = 0;  // tmix(1/4) - tmix(3/4)
  std::optional<double> tstar_theory;
  std::size_t renormalizations = 0;
};

MixingSummary summarize(const TVProfile& profile, std::vector<double> eps_grid);

struct LabeledStart {
  VertexId vertex = 0;
  std::string label;
};

// root, a level-ceil(h/2) vertex, first vertices of A (level h+2),
// B (level 2h+2) and the leaf level, whichever exist.
std::vector<LabeledStart> default_starts(const LeveledGraph& g);

// 0 when the graph has an odd cycle, otherwise 1/2.
double default_laziness(const LeveledGraph& g);

struct CutoffReport {
  std::vector<MixingSummary> per_start;
  std::size_t worst = 0;  // index with the largest tmix(1/4)
  double laziness = 0;
  std::int64_t t_max = 0;
  std::int64_t stride = 1;
};

struct CutoffOptions {
  std::vector<double> eps_grid{0.25, 0.75};
  std::int64_t t_max = 10000;
  std::int64_t stride = 0;
  std::optional<double> laziness;  // default_laziness when unset
  int threads = 1;
};

CutoffReport cutoff_report(const LeveledGraph& g, const std::vector<LabeledStart>& starts,
                           const CutoffOptions& opt);

}  // namespace ecut
