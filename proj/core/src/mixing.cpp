#include "ecut/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ecut/construction.hpp"
#include "ecut/error.hpp"
#include "ecut/graph_ops.hpp"
#include "ecut/parallel.hpp"

namespace ecut {

WalkOperator::WalkOperator(const LeveledGraph& g, double laziness, int threads)
    : g_(&g), laziness_(laziness), threads_(threads), inv_deg_(g.vertex_count()) {
  if (laziness < 0 || laziness > 0.5) throw Error("laziness must lie in [0, 1/2]");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw Error("isolated vertex");
    inv_deg_[v] = 1.0 / static_cast<double>(g.degree(v));
  }
}

void WalkOperator::apply(const DistVector& in, DistVector& out) const {
  const std::size_t n = g_->vertex_count();
  out.resize(n);
  const double move = 1.0 - laziness_;
  parallel_chunks(n, threads_, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t v = begin; v < end; ++v) {
      double acc = 0;
      for (VertexId u : g_->neighbors(static_cast<VertexId>(v))) acc += in[u] * inv_deg_[u];
      out[v] = laziness_ * in[v] + move * acc;
    }
  });
}

DistVector step(const LeveledGraph& g, const DistVector& p, double laziness) {
  if (p.size() != g.vertex_count()) throw Error("distribution size mismatch");
  DistVector out;
  WalkOperator(g, laziness).apply(p, out);
  return out;
}

double tv_to_uniform(const DistVector& p) {
  const double u = 1.0 / static_cast<double>(p.size());
  double s = 0;
  for (double x : p) s += std::abs(x - u);
  return s / 2;
}

double tv_to_stationary(const LeveledGraph& g, const DistVector& p) {
  const double two_e = static_cast<double>(2 * g.edge_count());
  double s = 0;
  for (VertexId v = 0; v < p.size(); ++v) s += std::abs(p[v] - g.degree(v) / two_e);
  return s / 2;
}

DistVector point_mass(std::size_t n, VertexId v) {
  if (v >= n) throw Error("vertex out of range");
  DistVector p(n, 0.0);
  p[v] = 1.0;
  return p;
}

std::int64_t default_stride(std::int64_t t_max) { return std::max<std::int64_t>(1, t_max / 2000); }

TVProfile tv_profile(const LeveledGraph& g, VertexId start, const ProfileOptions& opt) {
  if (opt.t_max < 0) throw Error("t_max must be nonnegative");
  TVProfile prof;
  prof.start = start;
  prof.laziness = opt.laziness;
  prof.stride = opt.stride > 0 ? opt.stride : default_stride(opt.t_max);

  const WalkOperator op(g, opt.laziness, opt.threads);
  DistVector p = point_mass(g.vertex_count(), start);
  DistVector next;
  auto record = [&](std::int64_t t) {
    prof.times.push_back(t);
    prof.tv.push_back(tv_to_stationary(g, p));
    return opt.stop_below > 0 && prof.tv.back() < opt.stop_below;
  };
  if (record(0)) return prof;
  for (std::int64_t t = 1; t <= opt.t_max; ++t) {
    op.apply(p, next);
    std::swap(p, next);
    if (t % 100 == 0) {
      const double mass = std::accumulate(p.begin(), p.end(), 0.0);
      if (std::abs(mass - 1.0) > 1e-9) {
        for (double& x : p) x /= mass;
        ++prof.renormalizations;
      }
    }
    if (t % prof.stride == 0 || t == opt.t_max) {
      if (record(t)) break;
    }
  }
  return prof;
}

Crossing mixing_crossing(const TVProfile& profile, double eps) {
  for (std::size_t i = 0; i < profile.times.size(); ++i) {
    if (profile.tv[i] < eps) {
      return {profile.times[i], i == 0 ? profile.times[i] : profile.times[i - 1]};
    }
  }
  throw Error("not mixed by t_max");
}

std::int64_t mixing_time(const TVProfile& profile, double eps) {
  return mixing_crossing(profile, eps).t;
}

MixingSummary summarize(const TVProfile& profile, std::vector<double> eps_grid) {
  for (double e : {0.25, 0.75}) {
    if (std::find(eps_grid.begin(), eps_grid.end(), e) == eps_grid.end()) eps_grid.push_back(e);
  }
  MixingSummary s;
  s.start = profile.start;
  s.renormalizations = profile.renormalizations;
  for (double e : eps_grid) {
    const Crossing c = mixing_crossing(profile, e);
    s.tmix[e] = c.t;
    s.brackets[e] = c;
  }
  const auto t_quarter = s.tmix.at(0.25);
  const auto t_three = s.tmix.at(0.75);
  s.cutoff_ratio = t_three > 0 ? static_cast<double>(t_quarter) / static_cast<double>(t_three)
                               : INFINITY;
  s.window_estimate = t_quarter - t_three;
  return s;
}

std::vector<LabeledStart> default_starts(const LeveledGraph& g) {
  const int h = g.meta().h;
  std::vector<LabeledStart> out;
  auto first_at = [&](std::int32_t level, const std::string& label) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.level(v) == level && (g.role(v) == Role::TreeNode || g.role(v) == Role::Leaf)) {
        out.push_back({v, label});
        return;
      }
    }
  };
  if (h <= 0 || g.levels().empty() || g.level(0) != 0) {
    out.push_back({0, "vertex0"});
    return out;
  }
  first_at(0, "root");
  first_at((h + 1) / 2, "mid");
  first_at(h + 2, "A");
  first_at(2 * h + 2, "B");
  first_at(3 * h + 2, "leaf");
  return out;
}

double default_laziness(const LeveledGraph& g) { return has_odd_cycle(g) ? 0.0 : 0.5; }

CutoffReport cutoff_report(const LeveledGraph& g, const std::vector<LabeledStart>& starts,
                           const CutoffOptions& opt) {
  if (starts.empty()) throw Error("no start vertices");
  CutoffReport rep;
  rep.laziness = opt.laziness ? *opt.laziness : default_laziness(g);
  rep.t_max = opt.t_max;
  rep.stride = opt.stride > 0 ? opt.stride : default_stride(opt.t_max);
  double smallest_eps = 0.25;
  for (double e : opt.eps_grid) smallest_eps = std::min(smallest_eps, e);

  const bool five = g.meta().variant == "five";
  for (const auto& s : starts) {
    ProfileOptions po;
    po.t_max = opt.t_max;
    po.stride = rep.stride;
    po.laziness = rep.laziness;
    po.stop_below = smallest_eps;
    po.threads = opt.threads;
    const TVProfile prof = tv_profile(g, s.vertex, po);
    MixingSummary sum = summarize(prof, opt.eps_grid);
    sum.label = s.label;
    if (five) sum.tstar_theory = theoretical_tstar(g.meta().h, g.meta().L);
    rep.per_start.push_back(std::move(sum));
  }
  for (std::size_t i = 1; i < rep.per_start.size(); ++i) {
    if (rep.per_start[i].tmix.at(0.25) > rep.per_start[rep.worst].tmix.at(0.25)) rep.worst = i;
  }
  return rep;
}

}  // namespace ecut
