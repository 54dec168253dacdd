#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monogamy/parallel.hpp"

namespace monogamy::cli {

// Exit status contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20140519;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::optional<long> samples;     // per-subcommand default when unset
  std::optional<int> grid_rows;    // fig2: alpha points; fig1: p points
  std::optional<int> grid_cols;    // fig2: kappa*t points
  std::string out_dir = ".";
  std::optional<double> tolerance;  // per-check default when unset
  int restarts = 4;
  Execution execution = Execution::parallel;
};

// Applies one key=value setting (keys: seed, samples, grid, out, tol,
// restarts, threads=serial|parallel). Throws std::invalid_argument.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

// Flat key=value file; '#' starts a comment. Throws std::invalid_argument
// with the line number on malformed lines.
void apply_config_file(RunConfig& config, std::istream& in);

// "RxC" -> (R, C); both positive.
std::pair<int, int> parse_grid(const std::string& text);

std::string format_csv_number(double value);  // 12 significant digits

int cmd_verify_propositions(const RunConfig& config, std::ostream& log);
int cmd_montecarlo(const std::string& kind, const RunConfig& config, std::ostream& log);
int cmd_fig1(const RunConfig& config, std::ostream& log);
int cmd_fig2(const RunConfig& config, std::ostream& log);
int cmd_table1(const std::vector<int>& sizes, const RunConfig& config, std::ostream& log);
int cmd_locc(const RunConfig& config, std::ostream& log);
int cmd_bound(const std::string& state_path, int focus, const RunConfig& config, std::ostream& log);

// Full command-line entry point (flags, config file, MONOGAMY_SEED).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monogamy::cli
