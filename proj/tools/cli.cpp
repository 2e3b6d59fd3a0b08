#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ecut/error.hpp"
#include "ecut/graph_io.hpp"
#include "ecut/graph_ops.hpp"
#include "ecut/mixing.hpp"
#include "ecut/montecarlo.hpp"
#include "ecut/parallel.hpp"
#include "ecut/spectral.hpp"

namespace ecut::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  if (!(in >> out) || !(in >> std::ws).eof()) throw UsageError("bad value for " + key + ": '" + value + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value.empty()) return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw UsageError("bad value for " + key + ": '" + value + "'");
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number<int>(key, item));
  if (out.empty()) throw UsageError("empty list for " + key);
  return out;
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw UsageError("--seed is required for " + cfg.command);
  return *cfg.seed;
}

std::vector<std::pair<std::string, std::string>> provenance(const RunConfig& cfg) {
  const auto& p = cfg.params;
  std::vector<std::pair<std::string, std::string>> out{
      {"tool", "ecut"},
      {"tool_version", kToolVersion},
      {"command", cfg.command},
      {"variant", variant_name(p.variant)},
      {"h", std::to_string(p.h)},
      {"L", std::to_string(p.L)},
  };
  if (p.variant == Variant::NoCutoff) out.emplace_back("Lprime", std::to_string(p.L_prime));
  if (p.variant == Variant::Cylinder) out.emplace_back("m", std::to_string(p.m));
  if (cfg.seed) {
    out.emplace_back("seed", std::to_string(*cfg.seed));
    out.emplace_back("expander_seeds",
                     std::to_string(*cfg.seed) + "," + std::to_string(*cfg.seed + 1));
  }
  out.emplace_back("override_L", p.override_L ? "1" : "0");
  if (p.truncate_forest) out.emplace_back("truncate_forest", "1");
  if (cfg.graph) out.emplace_back("graph", cfg.graph->string());
  return out;
}

json provenance_json(const RunConfig& cfg) {
  json j = json::object();
  for (const auto& [k, v] : provenance(cfg)) j[k] = v;
  return j;
}

std::string csv_header(const RunConfig& cfg) {
  std::string out;
  for (const auto& [k, v] : provenance(cfg)) out += "# " + k + "=" + v + "\n";
  return out;
}

void write_file(const fs::path& path, const std::string& text, std::ostream& log) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write failed: " + path.string());
  log << "wrote " << path.string() << '\n';
}

void write_json(const fs::path& path, const json& j, std::ostream& log) {
  write_file(path, j.dump(2) + "\n", log);
}

ConstructionParams build_params(const RunConfig& cfg) {
  ConstructionParams p = cfg.params;
  const std::uint64_t seed = require_seed(cfg);
  p.expander_seeds = {seed, seed + 1};
  p.threads = resolve_threads(cfg.threads);
  return p;
}

LeveledGraph load_or_build(const RunConfig& cfg) {
  if (cfg.graph) {
    if (!fs::exists(*cfg.graph)) throw UsageError("no such graph file: " + cfg.graph->string());
    return read_graph_file(*cfg.graph);
  }
  return build(build_params(cfg));
}

std::vector<LabeledStart> starts_for(const RunConfig& cfg, const LeveledGraph& g) {
  if (cfg.start) {
    if (*cfg.start >= g.vertex_count()) throw UsageError("start vertex out of range");
    return {{*cfg.start, "v" + std::to_string(*cfg.start)}};
  }
  return default_starts(g);
}

std::int64_t default_t_max(const RunConfig& cfg, const LeveledGraph& g) {
  if (cfg.t_max > 0) return cfg.t_max;
  const auto& meta = g.meta();
  if (meta.variant == "five" || meta.variant == "nocutoff") {
    const int L = std::max(meta.L, cfg.params.L_prime);
    return static_cast<std::int64_t>(std::ceil(8 * theoretical_tstar(meta.h, L))) + 1000;
  }
  return 100000;
}

json summary_json(const MixingSummary& s) {
  json j;
  j["start"] = s.start;
  j["label"] = s.label;
  json tm = json::array();
  for (const auto& [eps, t] : s.tmix) {
    const auto& b = s.brackets.at(eps);
    tm.push_back({{"eps", eps}, {"tmix", t}, {"bracket", {b.previous, b.t}}});
  }
  j["tmix"] = tm;
  j["cutoff_ratio"] = s.cutoff_ratio;
  j["window_estimate"] = s.window_estimate;
  if (s.tstar_theory) j["tstar_theory"] = *s.tstar_theory;
  j["renormalizations"] = s.renormalizations;
  return j;
}

json certificate_json(const NoCutoffCertificate& c) {
  return {{"source", c.source},
          {"eccentricity", c.eccentricity},
          {"exhaustive", c.exhaustive},
          {"gap_upper", c.gap_upper},
          {"gap_upper_n2", c.scaled},
          {"mass_low", c.mass_low},
          {"mass_high", c.mass_high},
          {"c", c.c},
          {"diameter_linear", c.diameter_linear},
          {"discrepancy_ok", c.discrepancy_ok},
          {"note", c.note}};
}

json stats_json(const HittingStats& s) {
  json j;
  j["count"] = s.samples.size();
  j["mean"] = s.mean;
  j["stddev"] = s.stddev;
  j["quantiles"] = {{"q05", s.quantiles[0]},
                    {"q25", s.quantiles[1]},
                    {"q50", s.quantiles[2]},
                    {"q75", s.quantiles[3]},
                    {"q95", s.quantiles[4]}};
  if (s.predicted) j["predicted"] = *s.predicted;
  if (s.cluster_means) j["cluster_means"] = {s.cluster_means->first, s.cluster_means->second};
  return j;
}

json bimodality_json(const BimodalityReport& b) {
  return {{"bimodal", b.bimodal},
          {"mean_low", b.mean_low},
          {"mean_high", b.mean_high},
          {"sd_low", b.sd_low},
          {"sd_high", b.sd_high},
          {"weight_low", b.weight_low},
          {"weight_high", b.weight_high},
          {"separation", b.separation}};
}

CutoffOptions cutoff_options(const RunConfig& cfg, const LeveledGraph& g) {
  CutoffOptions o;
  if (!cfg.eps.empty()) o.eps_grid = cfg.eps;
  o.t_max = default_t_max(cfg, g);
  // Cutoff profiles stop at the smallest eps, so exact steps are affordable.
  o.stride = cfg.stride > 0 ? cfg.stride : 1;
  o.laziness = cfg.laziness;
  o.threads = resolve_threads(cfg.threads);
  return o;
}

// ---------------------------------------------------------------------------

void cmd_build(const RunConfig& cfg, std::ostream& log) {
  const LeveledGraph g = build(build_params(cfg));
  GraphMeta meta = g.meta();
  GraphMeta stamped;
  stamped.variant = meta.variant;
  stamped.h = meta.h;
  stamped.L = meta.L;
  for (const auto& [k, v] : provenance(cfg)) stamped.set(k, v);
  for (const auto& [k, v] : meta.entries) stamped.set(k, v);
  write_file(cfg.output_dir / "graph.txt", serialize_graph(g.with_meta(stamped)), log);

  const auto census = level_census(g);
  const std::size_t d = g.vertex_count() ? g.degree(0) : 0;
  const bool regular = is_regular(g, d);
  const bool connected = is_connected(g);
  if (cfg.format == "csv") {
    std::string out = csv_header(cfg);
    out += "# vertices=" + std::to_string(g.vertex_count()) + "\n";
    out += "# edges=" + std::to_string(g.edge_count()) + "\n";
    out += "# regular_degree=" + (regular ? std::to_string(d) : std::string("none")) + "\n";
    out += "# connected=" + std::string(connected ? "1" : "0") + "\n";
    out += "level,count\n";
    for (const auto& [lvl, c] : census) out += std::to_string(lvl) + "," + std::to_string(c) + "\n";
    write_file(cfg.output_dir / "census.csv", out, log);
  } else {
    json j;
    j["provenance"] = provenance_json(cfg);
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["regular"] = regular;
    j["degree"] = regular ? json(d) : json(nullptr);
    j["connected"] = connected;
    json levels = json::array();
    for (const auto& [lvl, c] : census) levels.push_back({{"level", lvl}, {"count", c}});
    j["levels"] = levels;
    write_json(cfg.output_dir / "census.json", j, log);
  }
}

void cmd_spectral(const RunConfig& cfg, std::ostream& log) {
  const LeveledGraph g = load_or_build(cfg);
  SpectralOptions opt;
  opt.eig.threads = resolve_threads(cfg.threads);
  const SpectralReport r = spectral_report(g, opt);
  json j;
  j["provenance"] = provenance_json(cfg);
  j["n"] = r.n;
  j["degree"] = r.degree;
  j["lambda2"] = r.lambda2;
  j["lambda_second_signed"] = r.lambda_second;
  j["gap"] = r.gap;
  j["walk_gap"] = r.walk_gap;
  j["bipartite"] = r.bipartite;
  j["lazy_walk_gap"] = r.lazy_walk_gap;
  j["cheeger_exact"] = r.cheeger_exact ? json(*r.cheeger_exact) : json(nullptr);
  j["cheeger_lower"] = r.cheeger_lower;
  j["cheeger_upper"] = r.cheeger_upper;
  j["dirichlet_upper"] = r.dirichlet_upper ? json(*r.dirichlet_upper) : json(nullptr);
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  if (cfg.format == "csv") {
    std::string out = csv_header(cfg) + "field,value\n";
    for (const auto& [k, v] : j.items()) {
      if (k == "provenance" || k == "certificate") continue;
      out += k + "," + (v.is_null() ? std::string("") : v.dump()) + "\n";
    }
    write_file(cfg.output_dir / "spectral.csv", out, log);
  } else {
    write_json(cfg.output_dir / "spectral.json", j, log);
  }
}

void cmd_profile(const RunConfig& cfg, std::ostream& log) {
  const LeveledGraph g = load_or_build(cfg);
  ProfileOptions po;
  po.t_max = default_t_max(cfg, g);
  po.stride = cfg.stride;
  po.laziness = cfg.laziness ? *cfg.laziness : default_laziness(g);
  po.threads = resolve_threads(cfg.threads);
  json all = json::array();
  for (const auto& s : starts_for(cfg, g)) {
    const TVProfile prof = tv_profile(g, s.vertex, po);
    if (cfg.format == "json") {
      all.push_back({{"start", s.vertex},
                     {"label", s.label},
                     {"laziness", prof.laziness},
                     {"stride", prof.stride},
                     {"renormalizations", prof.renormalizations},
                     {"t", prof.times},
                     {"tv", prof.tv}});
      continue;
    }
    std::string out = csv_header(cfg);
    out += "# start=" + std::to_string(s.vertex) + "\n# start_label=" + s.label + "\n";
    out += "# laziness=" + num(prof.laziness) + "\n# stride=" + std::to_string(prof.stride) + "\n";
    out += "# renormalizations=" + std::to_string(prof.renormalizations) + "\n";
    out += "t,tv\n";
    for (std::size_t i = 0; i < prof.times.size(); ++i) {
      out += std::to_string(prof.times[i]) + "," + num(prof.tv[i]) + "\n";
    }
    write_file(cfg.output_dir / ("profile_" + s.label + ".csv"), out, log);
  }
  if (cfg.format == "json") {
    write_json(cfg.output_dir / "profile.json",
               {{"provenance", provenance_json(cfg)}, {"profiles", all}}, log);
  }
}

void cmd_hitting(const RunConfig& cfg, std::ostream& log) {
  const std::uint64_t seed = require_seed(cfg);
  const LeveledGraph g = load_or_build(cfg);
  const VertexId start = cfg.start.value_or(0);
  if (start >= g.vertex_count()) throw UsageError("start vertex out of range");
  HittingStats stats = sample_hitting_times(g, start, cfg.samples, seed, resolve_threads(cfg.threads));
  const auto& meta = g.meta();
  if (meta.variant == "five" && meta.h > 0 && g.level(start) >= 0) {
    const double alpha = static_cast<double>(g.level(start)) / meta.h;
    if (alpha <= 3) stats.predicted = predicted_tau(alpha, meta.h, meta.L);
  }
  json j;
  j["provenance"] = provenance_json(cfg);
  j["start"] = start;
  if (stats.samples.size() >= 1000) {
    const auto b = bimodality_check(stats);
    stats.cluster_means = std::pair{b.mean_low, b.mean_high};
    j["bimodality"] = bimodality_json(b);
  }
  j["stats"] = stats_json(stats);
  if (cfg.format == "csv") {
    std::string out = csv_header(cfg) + "field,value\n";
    for (const auto& [k, v] : j["stats"].items()) out += k + "," + v.dump() + "\n";
    write_file(cfg.output_dir / "hitting.csv", out, log);
  } else {
    write_json(cfg.output_dir / "hitting.json", j, log);
  }
  if (cfg.write_samples) {
    std::string out;
    for (auto s : stats.samples) out += std::to_string(s) + "\n";
    write_file(cfg.output_dir / "samples.txt", out, log);
  }
}

void cmd_cutoff_report(const RunConfig& cfg, std::ostream& log) {
  if (cfg.graph) throw UsageError("cutoff-report builds its own graphs; drop --graph");
  const std::vector<int> hs = cfg.h_values.empty() ? std::vector<int>{1, 2} : cfg.h_values;
  json rows = json::array();
  std::string csv = csv_header(cfg);
  bool header_done = false;
  for (int h : hs) {
    RunConfig sub = cfg;
    sub.params.h = h;
    const LeveledGraph g = build(build_params(sub));
    const CutoffReport rep = cutoff_report(g, starts_for(sub, g), cutoff_options(sub, g));
    for (std::size_t i = 0; i < rep.per_start.size(); ++i) {
      const auto& s = rep.per_start[i];
      json r = summary_json(s);
      r["h"] = h;
      r["worst"] = i == rep.worst;
      r["laziness"] = rep.laziness;
      rows.push_back(r);
      if (!header_done) {
        csv += "h,start,label";
        for (const auto& [eps, t] : s.tmix) csv += ",tmix_" + num(eps);
        csv += ",cutoff_ratio,window,worst\n";
        header_done = true;
      }
      csv += std::to_string(h) + "," + std::to_string(s.start) + "," + s.label;
      for (const auto& [eps, t] : s.tmix) csv += "," + std::to_string(t);
      csv += "," + num(s.cutoff_ratio) + "," + std::to_string(s.window_estimate) + "," +
             (i == rep.worst ? "1" : "0") + "\n";
    }
  }
  if (cfg.format == "csv") {
    write_file(cfg.output_dir / "cutoff.csv", csv, log);
  } else {
    write_json(cfg.output_dir / "cutoff.json", {{"provenance", provenance_json(cfg)}, {"rows", rows}},
               log);
  }
}

void cmd_cylinder_sweep(const RunConfig& cfg, std::ostream& log) {
  const std::uint64_t seed = require_seed(cfg);
  if (cfg.params.m < 4) throw UsageError("cylinder-sweep needs --m >= 4");
  const std::vector<int> Ls = cfg.L_values.empty() ? std::vector<int>{5, 9, 13, 17, 21} : cfg.L_values;
  EigenOptions eig;
  eig.threads = resolve_threads(cfg.threads);
  const CertifiedExpander host =
      make_expander({3, static_cast<std::size_t>(cfg.params.m), cfg.params.min_gap, seed}, eig);

  std::vector<double> xs;
  std::vector<double> ys;
  json rows = json::array();
  std::string csv = "L,n,tmix_0.25,tmix_0.75,gadget_passage\n";
  for (int L : Ls) {
    const LeveledGraph g = build_cylinder(host, L);
    CutoffOptions o;
    o.t_max = cfg.t_max > 0 ? cfg.t_max : 1000000;
    o.stride = cfg.stride > 0 ? cfg.stride : 1;
    o.laziness = cfg.laziness.value_or(0.5);
    o.threads = eig.threads;
    const auto rep = cutoff_report(g, {{0, "host0"}}, o);
    const auto& s = rep.per_start[0];
    const double passage = L == 1 ? 1.0 : cylinder_layout(L).passage_time;
    xs.push_back(std::log(static_cast<double>(L)));
    ys.push_back(std::log(static_cast<double>(s.tmix.at(0.25))));
    rows.push_back({{"L", L},
                    {"n", g.vertex_count()},
                    {"tmix_quarter", s.tmix.at(0.25)},
                    {"tmix_three_quarters", s.tmix.at(0.75)},
                    {"gadget_passage", passage}});
    csv += std::to_string(L) + "," + std::to_string(g.vertex_count()) + "," +
           std::to_string(s.tmix.at(0.25)) + "," + std::to_string(s.tmix.at(0.75)) + "," +
           num(passage) + "\n";
  }
  double slope = NAN;
  if (xs.size() >= 2) {
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    slope = sxy / sxx;
  }
  if (cfg.format == "csv") {
    std::string out = csv_header(cfg) + "# host_seed=" + std::to_string(host.seed_used) + "\n";
    out += "# laziness=" + num(cfg.laziness.value_or(0.5)) + "\n# loglog_slope=" + num(slope) + "\n";
    write_file(cfg.output_dir / "cylinder_sweep.csv", out + csv, log);
  } else {
    json j;
    j["provenance"] = provenance_json(cfg);
    j["host_seed"] = host.seed_used;
    j["laziness"] = cfg.laziness.value_or(0.5);
    j["rows"] = rows;
    j["loglog_slope"] = slope;
    write_json(cfg.output_dir / "cylinder_sweep.json", j, log);
  }
}

void cmd_nocutoff_demo(const RunConfig& cfg, std::ostream& log) {
  const std::uint64_t seed = require_seed(cfg);
  RunConfig sub = cfg;
  sub.params.variant = Variant::NoCutoff;
  if (sub.params.L_prime <= sub.params.L) throw UsageError("--Lprime must exceed --L");

  // Exact evolution needs the full graph; sampling works on the truncated one.
  json j;
  j["provenance"] = provenance_json(sub);
  const bool exact = sub.params.h <= 2 && !sub.params.truncate_forest;
  ConstructionParams p = build_params(sub);
  p.truncate_forest = !exact;
  if (p.truncate_forest) p.override_L = true;
  const LeveledGraph g = build(p);
  HittingStats stats = sample_hitting_times(g, 0, sub.samples, seed, resolve_threads(sub.threads));
  if (stats.samples.size() >= 1000) {
    const auto b = bimodality_check(stats);
    stats.cluster_means = std::pair{b.mean_low, b.mean_high};
    j["bimodality"] = bimodality_json(b);
  }
  j["hitting"] = stats_json(stats);
  if (exact) {
    const CutoffReport rep = cutoff_report(g, {{0, "root"}}, cutoff_options(sub, g));
    j["cutoff"] = summary_json(rep.per_start[0]);
  } else {
    j["cutoff"] = nullptr;
    j["note"] = "exact evolution skipped: forest below level 2h+2 omitted";
  }
  write_json(cfg.output_dir / "nocutoff.json", j, log);
}

}  // namespace

void apply_setting(const std::string& key, const std::string& value, RunConfig& cfg) {
  auto& p = cfg.params;
  if (key == "h") {
    p.h = parse_number<int>(key, value);
  } else if (key == "L") {
    p.L = parse_number<int>(key, value);
  } else if (key == "Lprime") {
    p.L_prime = parse_number<int>(key, value);
  } else if (key == "variant") {
    try {
      p.variant = parse_variant(value);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else if (key == "m") {
    p.m = parse_number<int>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "threads") {
    cfg.threads = parse_number<int>(key, value);
  } else if (key == "tmax") {
    cfg.t_max = parse_number<std::int64_t>(key, value);
  } else if (key == "stride") {
    cfg.stride = parse_number<std::int64_t>(key, value);
  } else if (key == "laziness") {
    cfg.laziness = parse_number<double>(key, value);
  } else if (key == "eps") {
    cfg.eps.push_back(parse_number<double>(key, value));
  } else if (key == "out") {
    cfg.output_dir = value;
  } else if (key == "format") {
    if (value != "json" && value != "csv") throw UsageError("format must be json or csv");
    cfg.format = value;
  } else if (key == "samples") {
    cfg.samples = parse_number<std::size_t>(key, value);
  } else if (key == "write-samples") {
    cfg.write_samples = parse_bool(key, value);
  } else if (key == "graph") {
    cfg.graph = value;
  } else if (key == "start") {
    cfg.start = parse_number<std::uint32_t>(key, value);
  } else if (key == "override-L") {
    p.override_L = parse_bool(key, value);
  } else if (key == "truncate-forest") {
    p.truncate_forest = parse_bool(key, value);
  } else if (key == "min-gap") {
    p.min_gap = parse_number<double>(key, value);
  } else if (key == "hs") {
    cfg.h_values = parse_int_list(key, value);
  } else if (key == "Ls") {
    cfg.L_values = parse_int_list(key, value);
  } else if (key == "command") {
    cfg.command = value;
  } else {
    throw UsageError("unknown setting '" + key + "'");
  }
}

void apply_config_file(const fs::path& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    apply_setting(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), cfg);
  }
}

int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    if (!cfg.graph || cfg.command == "build") {
      // Graph-free commands still validate construction parameters up front.
      if (cfg.params.h < 1) throw UsageError("--h must be positive");
      if (cfg.params.L < 1) throw UsageError("--L must be positive");
    }
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw UsageError("cannot create output directory " + cfg.output_dir.string());

    if (cfg.command == "build") {
      cmd_build(cfg, log);
    } else if (cfg.command == "spectral") {
      cmd_spectral(cfg, log);
    } else if (cfg.command == "profile") {
      cmd_profile(cfg, log);
    } else if (cfg.command == "hitting") {
      cmd_hitting(cfg, log);
    } else if (cfg.command == "cutoff-report") {
      cmd_cutoff_report(cfg, log);
    } else if (cfg.command == "cylinder-sweep") {
      cmd_cylinder_sweep(cfg, log);
    } else if (cfg.command == "nocutoff-demo") {
      cmd_nocutoff_demo(cfg, log);
    } else {
      throw UsageError("unknown command '" + cfg.command + "'");
    }
    return 0;
  } catch (const UsageError& e) {
    err << "ecut: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "ecut: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ecut::cli
