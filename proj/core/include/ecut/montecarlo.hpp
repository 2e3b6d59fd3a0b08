#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ecut/graph.hpp"

namespace ecut {

struct HittingStats {
  std::vector<std::int64_t> samples;
  double mean = 0;
  double stddev = 0;
  std::array<double, 5> quantiles{};  // 5%, 25%, 50%, 75%, 95%
  std::optional<double> predicted;
  std::optional<std::pair<double, double>> cluster_means;
};

HittingStats summarize_samples(std::vector<std::int64_t> samples);

inline constexpr std::int64_t kStepCap = 1'000'000'000;

// Steps of the simple random walk from `start` until it first reaches a Leaf
// vertex. On truncated builds the unstretched forest below the frontier level
// is walked as its exact height process. Trajectory = f(seed, stream).
std::int64_t sample_hitting_time(const LeveledGraph& g, VertexId start, std::uint64_t seed,
                                 std::uint64_t stream = 0, std::int64_t step_cap = kStepCap);

// Sample i uses stream i, so results do not depend on `threads`.
HittingStats sample_hitting_times(const LeveledGraph& g, VertexId start, std::size_t count,
                                  std::uint64_t seed, int threads = 1);

// Leading-order expected leaf hitting time on the FiveRegular build for a
// start at level alpha*h, alpha in [0, 3].
double predicted_tau(double alpha, int h, int L);

struct PassageEstimate {
  double mean_time = 0;
  double mean_visits = 0;
  double time_stderr = 0;
  double visits_stderr = 0;
};

// 1D walk from 0 absorbed at +-L; time and visits to 0 (start included).
PassageEstimate path_passage_oracle(int L, std::size_t samples, std::uint64_t seed);

// L(5L-3)/2.
double stretched_edge_delay(int L);

// 1D walk from 0 to +-L where every nonzero interior site holds the walk
// with probability 3/5 per step.
PassageEstimate stretched_edge_delay_mc(int L, std::size_t samples, std::uint64_t seed);

struct BimodalityReport {
  bool bimodal = false;
  double mean_low = 0;
  double mean_high = 0;
  double sd_low = 0;
  double sd_high = 0;
  double weight_low = 0;
  double weight_high = 0;
  double separation = 0;  // |mu1 - mu2| / sqrt((s1^2 + s2^2) / 2)
  int iterations = 0;
};

// Two-component Gaussian mixture fitted by EM from a median split. Flags
// bimodal when both weights lie in [0.35, 0.65] and separation > 2.
// Needs at least 1000 samples.
BimodalityReport bimodality_check(const HittingStats& stats);
BimodalityReport bimodality_check(const std::vector<std::int64_t>& samples);

// Mean first-passage time between the gadget's ports (meta port_a/port_b).
PassageEstimate cylinder_passage_oracle(const LeveledGraph& gadget, std::size_t samples,
                                        std::uint64_t seed, int threads = 1);

}  // namespace ecut
