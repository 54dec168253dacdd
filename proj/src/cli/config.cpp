#include <cstdio>
#include <istream>
#include <stdexcept>
#include <string>

#include "monogamy/cli.hpp"

namespace monogamy::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T, class Parse>
T parse_whole(const std::string& key, const std::string& value, Parse parse) {
  std::size_t used = 0;
  T out{};
  try {
    out = parse(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
  if (used != value.size()) throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  return out;
}

long parse_positive(const std::string& key, const std::string& value) {
  const long v = parse_whole<long>(key, value, [](const std::string& s, std::size_t* u) {
    return std::stol(s, u);
  });
  if (v < 1) throw std::invalid_argument(key + " must be positive");
  return v;
}

}  // namespace

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw std::invalid_argument("grid must look like RxC");
  const long rows = parse_positive("grid", text.substr(0, x));
  const long cols = parse_positive("grid", text.substr(x + 1));
  return {static_cast<int>(rows), static_cast<int>(cols)};
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "seed") {
    config.seed = parse_whole<std::uint64_t>(key, value, [](const std::string& s, std::size_t* u) {
      if (!s.empty() && s.front() == '-') throw std::invalid_argument("negative seed");
      return std::stoull(s, u);
    });
  } else if (key == "samples") {
    config.samples = parse_positive(key, value);
  } else if (key == "grid") {
    const auto [r, c] = parse_grid(value);
    config.grid_rows = r;
    config.grid_cols = c;
  } else if (key == "out") {
    if (value.empty()) throw std::invalid_argument("out must be a directory path");
    config.out_dir = value;
  } else if (key == "tol") {
    const double tol = parse_whole<double>(key, value, [](const std::string& s, std::size_t* u) {
      return std::stod(s, u);
    });
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    config.tolerance = tol;
  } else if (key == "restarts") {
    config.restarts = static_cast<int>(parse_positive(key, value));
  } else if (key == "threads") {
    if (value == "serial") {
      config.execution = Execution::serial;
    } else if (value == "parallel") {
      config.execution = Execution::parallel;
    } else {
      throw std::invalid_argument("threads must be serial or parallel");
    }
  } else {
    throw std::invalid_argument("unknown setting '" + key + "'");
  }
}

void apply_config_file(RunConfig& config, std::istream& in) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key=value");
    }
    try {
      apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
    }
  }
}

std::string format_csv_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value == 0.0 ? 0.0 : value);
  return buf;
}

}  // namespace monogamy::cli
