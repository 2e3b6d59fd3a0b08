#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Build expander constructions and measure their random-walk mixing."};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", ecut::cli::kToolVersion);

  std::string command;
  std::string config;
  app.add_option("command", command,
                 "build | spectral | profile | hitting | cutoff-report | cylinder-sweep | nocutoff-demo")
      ->required();
  app.add_option("--config", config, "key=value file; flags override it");

  // Every flag is captured as text and applied after the config file.
  const std::vector<std::pair<std::string, std::string>> scalar_flags{
      {"h", "tree height"},
      {"L", "stretch length"},
      {"Lprime", "long stretch length (nocutoff)"},
      {"variant", "five | cubic | nocutoff | cylinder"},
      {"m", "cylinder host size"},
      {"seed", "seed for expanders and sampling (required where randomness is used)"},
      {"threads", "worker threads (default: available cores)"},
      {"tmax", "evolution horizon"},
      {"stride", "profile sampling stride"},
      {"laziness", "holding probability in [0, 1/2]"},
      {"out", "output directory"},
      {"format", "json | csv"},
      {"samples", "Monte Carlo sample count"},
      {"graph", "analyze this graph file instead of building"},
      {"start", "start vertex"},
      {"min-gap", "certified expander gap"},
      {"hs", "cutoff-report heights, comma separated"},
      {"Ls", "cylinder-sweep lengths, comma separated"},
  };
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& [name, help] : scalar_flags) {
    options[name] = app.add_option("--" + name, values[name], help);
  }
  std::vector<std::string> eps;
  auto* eps_opt = app.add_option("--eps", eps, "mixing threshold (repeatable)");
  bool override_L = false;
  bool truncate = false;
  bool write_samples = false;
  auto* override_opt = app.add_flag("--override-L", override_L, "allow L below the admissible bound");
  auto* truncate_opt = app.add_flag("--truncate-forest", truncate, "omit the forest below level 2h+2");
  auto* samples_opt = app.add_flag("--write-samples", write_samples, "also write raw samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ecut::cli::RunConfig cfg;
  try {
    if (!config.empty()) ecut::cli::apply_config_file(config, cfg);
    cfg.command = command;
    for (const auto& [name, help] : scalar_flags) {
      if (options[name]->count() > 0) ecut::cli::apply_setting(name, values[name], cfg);
    }
    if (eps_opt->count() > 0) {
      cfg.eps.clear();
      for (const auto& e : eps) ecut::cli::apply_setting("eps", e, cfg);
    }
    if (override_opt->count() > 0) cfg.params.override_L = override_L;
    if (truncate_opt->count() > 0) cfg.params.truncate_forest = truncate;
    if (samples_opt->count() > 0) cfg.write_samples = write_samples;
  } catch (const ecut::cli::UsageError& e) {
    std::cerr << "ecut: " << e.what() << '\n';
    return 2;
  }
  return ecut::cli::run(cfg, std::cout, std::cerr);
}
