#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monogamy/cli.hpp"
#include "monogamy/error.hpp"

namespace monogamy::cli {
namespace {

// Raw flag text; validated through apply_setting so flags and the config
// file share one set of rules.
struct FlagValues {
  std::string seed, samples, grid, out, tol, restarts, threads, config;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Squared entanglement-of-formation monogamy toolkit", "monogamy"};
  app.require_subcommand(1);
  FlagValues flags;
  app.add_option("--seed", flags.seed, "master seed (U64); falls back to MONOGAMY_SEED");
  app.add_option("--samples", flags.samples, "Monte Carlo sample count");
  app.add_option("--grid", flags.grid, "grid size RxC");
  app.add_option("--out", flags.out, "output directory for CSV files");
  app.add_option("--tol", flags.tol, "tolerance override");
  app.add_option("--restarts", flags.restarts, "convex-roof restarts");
  app.add_option("--threads", flags.threads, "serial or parallel");
  app.add_option("--config", flags.config, "key=value configuration file");

  auto* verify = app.add_subcommand("verify-propositions", "derivative and convexity checks");
  std::string kind;
  auto* montecarlo = app.add_subcommand("montecarlo", "random-state inequality checks");
  montecarlo->add_option("kind", kind, "pure3, pure4 or rank2mixed3")
      ->required()
      ->check(CLI::IsMember({"pure3", "pure4", "rank2mixed3"}));
  auto* fig1 = app.add_subcommand("fig1", "GHZ/W mixture indicator curve");
  auto* fig2 = app.add_subcommand("fig2", "cavity-reservoir indicator surface");
  std::vector<int> sizes = {3, 4, 7, 10, 20, 30};
  auto* table1 = app.add_subcommand("table1", "W_N / |1..1> mixture indicator");
  table1->add_option("-n,--n", sizes, "qubit counts");
  auto* locc = app.add_subcommand("locc", "non-monotonicity under a local POVM");
  std::string state_path;
  int focus = 0;
  auto* bound = app.add_subcommand("bound", "pairwise lower bound for a state file");
  bound->add_option("file", state_path, "state file")->required();
  bound->add_option("--focus", focus, "focus qubit");
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig config;
  try {
    if (const char* env = std::getenv("MONOGAMY_SEED"); env != nullptr && *env != '\0') {
      apply_setting(config, "seed", env);
    }
    if (!flags.config.empty()) {
      std::ifstream in(flags.config);
      if (!in) throw std::invalid_argument("cannot read config file " + flags.config);
      apply_config_file(config, in);
    }
    const std::pair<const char*, const std::string*> settings[] = {
        {"seed", &flags.seed}, {"samples", &flags.samples}, {"grid", &flags.grid},
        {"out", &flags.out},   {"tol", &flags.tol},         {"restarts", &flags.restarts},
        {"threads", &flags.threads}};
    for (const auto& [key, value] : settings) {
      if (!value->empty()) apply_setting(config, key, *value);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify_propositions(config, out);
    if (*montecarlo) return cmd_montecarlo(kind, config, out);
    if (*fig1) return cmd_fig1(config, out);
    if (*fig2) return cmd_fig2(config, out);
    if (*table1) return cmd_table1(sizes, config, out);
    if (*locc) return cmd_locc(config, out);
    if (*bound) return cmd_bound(state_path, focus, config, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace monogamy::cli
