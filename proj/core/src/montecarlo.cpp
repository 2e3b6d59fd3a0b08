#include "ecut/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "ecut/error.hpp"
#include "ecut/parallel.hpp"
#include "ecut/rng.hpp"

namespace ecut {

namespace {

struct MeanVar {
  double mean = 0;
  double stderr_ = 0;
};

MeanVar mean_stderr(const std::vector<double>& xs) {
  MeanVar out;
  if (xs.empty()) return out;
  double s = 0;
  for (double x : xs) s += x;
  out.mean = s / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double v = 0;
    for (double x : xs) v += (x - out.mean) * (x - out.mean);
    v /= static_cast<double>(xs.size() - 1);
    out.stderr_ = std::sqrt(v / static_cast<double>(xs.size()));
  }
  return out;
}

// Runs body(i) -> pair for i in [0, n) and returns the values in index order.
template <class Body>
std::vector<std::pair<double, double>> run_indexed(std::size_t n, int threads, Body&& body) {
  std::vector<std::pair<double, double>> out(n);
  parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) out[i] = body(i);
  });
  return out;
}

PassageEstimate collect(const std::vector<std::pair<double, double>>& draws) {
  std::vector<double> a;
  std::vector<double> b;
  a.reserve(draws.size());
  b.reserve(draws.size());
  for (const auto& [x, y] : draws) {
    a.push_back(x);
    b.push_back(y);
  }
  const auto ma = mean_stderr(a);
  const auto mb = mean_stderr(b);
  return {ma.mean, mb.mean, ma.stderr_, mb.stderr_};
}

double quantile(const std::vector<std::int64_t>& sorted, double q) {
  if (sorted.empty()) return 0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return static_cast<double>(sorted[lo]) * (1 - frac) + static_cast<double>(sorted[hi]) * frac;
}

struct ForestTail {
  bool active = false;
  std::int32_t frontier_level = 0;
  int depth = 0;
  int branching = 0;
};

ForestTail forest_tail(const LeveledGraph& g) {
  ForestTail t;
  const auto& meta = g.meta();
  if (meta.get("truncated") != std::optional<std::string>("1")) return t;
  t.active = true;
  t.frontier_level = static_cast<std::int32_t>(meta.get_int("frontier_level").value_or(-1));
  t.depth = static_cast<int>(meta.get_int("forest_depth").value_or(0));
  t.branching = static_cast<int>(meta.get_int("forest_branching").value_or(0));
  if (t.frontier_level < 0 || t.depth < 1 || t.branching < 1) {
    throw Error("truncated graph lacks forest metadata");
  }
  return t;
}

std::int64_t walk_to_leaves(const LeveledGraph& g, const ForestTail& tail, VertexId start,
                            CounterRng& rng, std::int64_t cap) {
  VertexId v = start;
  std::int64_t t = 0;
  const auto b = static_cast<std::uint64_t>(tail.branching);
  while (true) {
    if (g.role(v) == Role::Leaf) return t;
    if (t >= cap) throw Error("step cap exceeded");
    if (tail.active && g.role(v) == Role::TreeNode && g.level(v) == tail.frontier_level) {
      // Height below v in the omitted forest; leaves sit at tail.depth.
      int k = 0;
      while (true) {
        if (t >= cap) throw Error("step cap exceeded");
        ++t;
        const bool down = rng.below(b + 1) < b;
        if (k == 0 && !down) break;
        k += down ? 1 : -1;
        if (k == tail.depth) return t;
      }
    } else {
      ++t;
    }
    const auto nb = g.neighbors(v);
    v = nb[rng.below(nb.size())];
  }
}

}  // namespace

HittingStats summarize_samples(std::vector<std::int64_t> samples) {
  HittingStats s;
  s.samples = std::move(samples);
  if (s.samples.empty()) return s;
  std::vector<double> xs(s.samples.begin(), s.samples.end());
  const auto mv = mean_stderr(xs);
  s.mean = mv.mean;
  s.stddev = mv.stderr_ * std::sqrt(static_cast<double>(xs.size()));
  std::vector<std::int64_t> sorted = s.samples;
  std::sort(sorted.begin(), sorted.end());
  const double qs[5] = {0.05, 0.25, 0.5, 0.75, 0.95};
  for (std::size_t i = 0; i < 5; ++i) s.quantiles[i] = quantile(sorted, qs[i]);
  return s;
}

std::int64_t sample_hitting_time(const LeveledGraph& g, VertexId start, std::uint64_t seed,
                                 std::uint64_t stream, std::int64_t step_cap) {
  if (start >= g.vertex_count()) throw Error("vertex out of range");
  const ForestTail tail = forest_tail(g);
  if (!tail.active &&
      std::none_of(g.roles().begin(), g.roles().end(), [](Role r) { return r == Role::Leaf; })) {
    throw Error("graph has no leaf level");
  }
  CounterRng rng(seed, stream);
  return walk_to_leaves(g, tail, start, rng, step_cap);
}

HittingStats sample_hitting_times(const LeveledGraph& g, VertexId start, std::size_t count,
                                  std::uint64_t seed, int threads) {
  if (start >= g.vertex_count()) throw Error("vertex out of range");
  const ForestTail tail = forest_tail(g);
  if (!tail.active &&
      std::none_of(g.roles().begin(), g.roles().end(), [](Role r) { return r == Role::Leaf; })) {
    throw Error("graph has no leaf level");
  }
  std::vector<std::int64_t> samples(count);
  parallel_chunks(count, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) {
      CounterRng rng(seed, i);
      samples[i] = walk_to_leaves(g, tail, start, rng, kStepCap);
    }
  });
  return summarize_samples(std::move(samples));
}

double predicted_tau(double alpha, int h, int L) {
  if (!(alpha >= 0 && alpha <= 3)) throw Error("alpha must lie in [0, 3]");
  if (alpha <= 2) return 5.0 / 3.0 * (L * (5.0 * L - 3.0) * (1 - alpha / 2) + 1) * h;
  return 5.0 / 3.0 * (3 - alpha) * h;
}

PassageEstimate path_passage_oracle(int L, std::size_t samples, std::uint64_t seed) {
  if (L < 1) throw Error("L must be positive");
  return collect(run_indexed(samples, 1, [&](std::size_t i) {
    CounterRng rng(seed, i);
    int x = 0;
    std::int64_t t = 0;
    std::int64_t visits = 1;
    while (x != L && x != -L) {
      x += (rng.next() >> 63) ? 1 : -1;
      ++t;
      if (x == 0) ++visits;
    }
    return std::pair<double, double>(static_cast<double>(t), static_cast<double>(visits));
  }));
}

double stretched_edge_delay(int L) {
  if (L < 1) throw Error("L must be positive");
  return L * (5.0 * L - 3.0) / 2.0;
}

PassageEstimate stretched_edge_delay_mc(int L, std::size_t samples, std::uint64_t seed) {
  if (L < 1) throw Error("L must be positive");
  return collect(run_indexed(samples, 1, [&](std::size_t i) {
    CounterRng rng(seed, i);
    int x = 0;
    std::int64_t t = 0;
    std::int64_t visits = 1;
    while (x != L && x != -L) {
      ++t;
      if (x != 0 && rng.below(5) < 3) continue;
      x += (rng.next() >> 63) ? 1 : -1;
      if (x == 0) ++visits;
    }
    return std::pair<double, double>(static_cast<double>(t), static_cast<double>(visits));
  }));
}

BimodalityReport bimodality_check(const std::vector<std::int64_t>& samples) {
  if (samples.size() < 1000) throw Error("bimodality check needs at least 1000 samples");
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  const std::size_t half = n / 2;

  double total_mean = 0;
  for (double v : x) total_mean += v;
  total_mean /= static_cast<double>(n);
  double total_var = 0;
  for (double v : x) total_var += (v - total_mean) * (v - total_mean);
  total_var /= static_cast<double>(n);
  const double floor = std::max(1e-12, 1e-4 * total_var);

  double w[2] = {0.5, 0.5};
  double mu[2] = {0, 0};
  double var[2] = {0, 0};
  for (std::size_t i = 0; i < n; ++i) mu[i < half ? 0 : 1] += x[i];
  mu[0] /= static_cast<double>(half);
  mu[1] /= static_cast<double>(n - half);
  for (std::size_t i = 0; i < n; ++i) {
    const int c = i < half ? 0 : 1;
    var[c] += (x[i] - mu[c]) * (x[i] - mu[c]);
  }
  var[0] = std::max(floor, var[0] / static_cast<double>(half));
  var[1] = std::max(floor, var[1] / static_cast<double>(n - half));

  BimodalityReport r;
  std::vector<double> resp(n);
  double prev_ll = -INFINITY;
  for (int it = 0; it < 500; ++it) {
    r.iterations = it + 1;
    double ll = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double lp[2];
      for (int c = 0; c < 2; ++c) {
        const double z = x[i] - mu[c];
        lp[c] = std::log(w[c]) - 0.5 * std::log(2 * M_PI * var[c]) - z * z / (2 * var[c]);
      }
      const double m = std::max(lp[0], lp[1]);
      const double lse = m + std::log(std::exp(lp[0] - m) + std::exp(lp[1] - m));
      resp[i] = std::exp(lp[1] - lse);
      ll += lse;
    }
    double sw[2] = {0, 0};
    double sx[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      sw[0] += 1 - resp[i];
      sw[1] += resp[i];
      sx[0] += (1 - resp[i]) * x[i];
      sx[1] += resp[i] * x[i];
    }
    if (sw[0] < 1e-9 || sw[1] < 1e-9) break;
    for (int c = 0; c < 2; ++c) {
      w[c] = sw[c] / static_cast<double>(n);
      mu[c] = sx[c] / sw[c];
    }
    double sv[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      sv[0] += (1 - resp[i]) * (x[i] - mu[0]) * (x[i] - mu[0]);
      sv[1] += resp[i] * (x[i] - mu[1]) * (x[i] - mu[1]);
    }
    for (int c = 0; c < 2; ++c) var[c] = std::max(floor, sv[c] / sw[c]);
    if (std::abs(ll - prev_ll) < 1e-10 * std::max(1.0, std::abs(ll))) break;
    prev_ll = ll;
  }

  const int lo = mu[0] <= mu[1] ? 0 : 1;
  const int hi = 1 - lo;
  r.mean_low = mu[lo];
  r.mean_high = mu[hi];
  r.sd_low = std::sqrt(var[lo]);
  r.sd_high = std::sqrt(var[hi]);
  r.weight_low = w[lo];
  r.weight_high = w[hi];
  r.separation = std::abs(mu[1] - mu[0]) / std::sqrt((var[0] + var[1]) / 2);
  const auto balanced = [](double v) { return v >= 0.35 && v <= 0.65; };
  r.bimodal = balanced(r.weight_low) && balanced(r.weight_high) && r.separation > 2;
  return r;
}

BimodalityReport bimodality_check(const HittingStats& stats) {
  return bimodality_check(stats.samples);
}

PassageEstimate cylinder_passage_oracle(const LeveledGraph& gadget, std::size_t samples,
                                        std::uint64_t seed, int threads) {
  const auto a = gadget.meta().get_int("port_a");
  const auto b = gadget.meta().get_int("port_b");
  if (!a || !b) throw Error("gadget has no designated ports");
  const auto from = static_cast<VertexId>(*a);
  const auto to = static_cast<VertexId>(*b);
  return collect(run_indexed(samples, threads, [&](std::size_t i) {
    CounterRng rng(seed, i);
    VertexId v = from;
    std::int64_t t = 0;
    while (v != to) {
      if (t >= kStepCap) throw Error("step cap exceeded");
      const auto nb = gadget.neighbors(v);
      v = nb[rng.below(nb.size())];
      ++t;
    }
    return std::pair<double, double>(static_cast<double>(t), 0.0);
  }));
}

}  // namespace ecut
