// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monogamy/cli.hpp"
#include "monogamy/convex_roof.hpp"
#include "monogamy/discord.hpp"
#include "monogamy/dynamics.hpp"
#include "monogamy/indicators.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/states.hpp"
#include "oracles.hpp"

using namespace monogamy;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool near(double value, double target, double tol) { return std::abs(value - target) <= tol; }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("monogamy_acceptance_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "monogamy");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream sink;
  return cli::run(static_cast<int>(argv.size()), argv.data(), sink, sink);
}

Verdict table1() {
  Verdict v;
  const int sizes[] = {3, 4, 7, 10, 20, 30};
  const double reference[] = {0.2992, 0.2813, 0.0992, 0.0401, 0.0053, 0.0015};
  for (int i = 0; i < 6; ++i) {
    const double got = table1_value(sizes[i]);
    v.require(near(got, reference[i], 5e-4),
              "N=" + std::to_string(sizes[i]) + " got " + fmt("%.4f", got) + " want " + fmt("%.4f", reference[i]));
  }
  return v;
}

Verdict constants() {
  Verdict v;
  const GhzWConstants& k = ghzw_constants();
  v.require(near(k.s_w, 0.238162, 1e-5), "s_w " + fmt("%.6f", k.s_w));
  v.require(near(k.s_p, 0.217061, 1e-4), "s_p " + fmt("%.6f", k.s_p));
  v.require(near(k.p0, 0.627, 1e-3), "p0 " + fmt("%.6f", k.p0));
  v.require(three_tangle_pure(psi_j_p(0, k.p0)) < 1e-8, "tangle at p0 not zero");
  v.note("p0=" + fmt("%.6f", k.p0) + " s_p=" + fmt("%.6f", k.s_p) + " s_w=" + fmt("%.6f", k.s_w));
  return v;
}

Verdict w_score() {
  Verdict v;
  const double s = monogamy_score_ef(w3(), 0);
  v.require(near(s, -0.1818, 1e-3), "score " + fmt("%.4f", s));
  v.note("score=" + fmt("%.4f", s));
  return v;
}

Verdict locc() {
  Verdict v;
  const LoccReport r = locc_counterexample();
  v.require(near(r.before.value, 0.0925, 1e-3), "before " + fmt("%.4f", r.before.value));
  v.require(near(r.average, 0.1034, 1e-3), "average " + fmt("%.4f", r.average));
  v.require(near(r.difference, 0.0109, 2e-3) && r.difference > 0.0, "difference " + fmt("%.4f", r.difference));
  v.require(r.branches.size() == 2, "expected two branches");
  if (r.branches.size() == 2) {
    v.require(near(r.branches[0].probability, 0.6047, 1e-3), "p1 " + fmt("%.4f", r.branches[0].probability));
    v.require(near(r.branches[0].report.value, 0.0157, 1e-3), "branch 1 " + fmt("%.4f", r.branches[0].report.value));
    v.require(near(r.branches[1].report.value, 0.2376, 1e-3), "branch 2 " + fmt("%.4f", r.branches[1].report.value));
  }
  v.note("before=" + fmt("%.4f", r.before.value) + " after=" + fmt("%.4f", r.average) +
         " diff=" + fmt("%.4f", r.difference));
  return v;
}

Verdict propositions() {
  Verdict v;
  cli::RunConfig c;
  c.out_dir = scratch("propositions").string();
  std::ostringstream log;
  v.require(cli::cmd_verify_propositions(c, log) == cli::kExitOk, "verify-propositions failed: " + log.str());
  // Independent spot checks with oracle finite differences.
  const double h = 1e-6;
  for (double x : {0.05, 0.5, 0.95}) {
    const double fd = (oracle::sef(x + h) - oracle::sef(x - h)) / (2 * h);
    v.require(std::abs(sef_d1(x) - fd) <= 1e-5 * std::abs(fd), "sef_d1 at " + fmt("%g", x));
  }
  v.require(near(sef_d2(1.0), 0.55979, 1e-4), "endpoint " + fmt("%.5f", sef_d2(1.0)));
  return v;
}

Verdict montecarlo() {
  Verdict v;
  cli::RunConfig c;
  c.out_dir = scratch("montecarlo").string();
  for (const char* kind : {"pure3", "pure4", "rank2mixed3"}) {
    std::ostringstream log;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::cmd_montecarlo(kind, c, log);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(code == cli::kExitOk, std::string(kind) + " violations");
    if (std::string(kind) == "rank2mixed3") v.require(secs <= 120.0, "rank2mixed3 took " + fmt("%.1f s", secs));
    v.note(std::string(kind) + " " + fmt("%.1f s", secs));
  }
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  RoofConfig roof;
  roof.restarts = 1;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = random_mixed({2, 2}, 1 + k % 4, derive_seed(1001, k));
    roof.seed = derive_seed(1002, k);
    const double w = eof_from_concurrence(std::min(1.0, oracle::concurrence(rho.matrix())));
    worst = std::max(worst, std::abs(eof_mixed(rho, {0}, roof) - w));
  }
  v.require(worst <= 1e-3, "roof vs Wootters " + fmt("%.2e", worst));

  double worst_kw = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double alpha = i / 9.0;
      const double kt = 3.0 * j / 9.0;
      const DensityMatrix rho = partial_trace(DensityMatrix::from_pure(cavity_output(alpha, kt)), {0, 1, 2});
      worst_kw = std::max(worst_kw, std::abs(eof_via_koashi_winter(rho, 0) - eof_c1_c2r1_closed_form(alpha, kt)));
    }
  }
  v.require(worst_kw <= 1e-6, "KW vs closed form " + fmt("%.2e", worst_kw));

  double worst_mixed = 0.0;
  RoofConfig three;
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = random_mixed({2, 2, 2}, 2, derive_seed(1003, k));
    three.seed = derive_seed(1004, k);
    worst_mixed = std::max(worst_mixed, std::abs(eof_mixed(rho, {k % 3}, three) - eof_via_koashi_winter(rho, k % 3)));
  }
  v.require(worst_mixed <= 2e-3, "roof vs KW " + fmt("%.2e", worst_mixed));
  v.note("gaps " + fmt("%.1e", worst) + " " + fmt("%.1e", worst_kw) + " " + fmt("%.1e", worst_mixed));
  return v;
}

Verdict fig1() {
  Verdict v;
  const double p0 = ghzw_constants().p0;
  for (int i = 1; i < 200; ++i) {
    const double p = p0 * i / 200.0;
    if (!(tau1_ghzw_closed_form(p) > 0.0)) v.require(false, "closed form not positive at " + fmt("%.4f", p));
  }
  double worst_c = 0.0;
  double worst_gap = -1.0;
  RoofConfig roof;
  for (int i = 0; i < 10; ++i) {
    const double p = 0.3 + (p0 - 0.3) * (i + 0.5) / 10.0;
    const DensityMatrix rho = ghzw_mixture(p);
    for (const Subsystems& pair : {Subsystems{0, 1}, Subsystems{0, 2}, Subsystems{1, 2}}) {
      worst_c = std::max(worst_c, concurrence_two_qubit(partial_trace(rho, pair)));
    }
    roof.seed = derive_seed(2001, i);
    worst_gap = std::max(worst_gap, tau1_mixed(rho, 0, roof) - tau1_ghzw_closed_form(p));
  }
  v.require(worst_c <= 1e-8, "pair concurrence " + fmt("%.2e", worst_c));
  v.require(worst_gap <= 2e-3, "optimizer above closed form by " + fmt("%.2e", worst_gap));
  v.note("max optimizer - closed = " + fmt("%.2e", worst_gap));
  return v;
}

Verdict fig2() {
  Verdict v;
  const auto alphas = linspace(0.0, 1.0, 50);
  const auto kts = linspace(0.0, 3.0, 50);
  const auto cells = tau2_grid_c1_c2r1(alphas, kts);
  double min_tau = 1e300;
  double worst_edge = 0.0;
  double worst_bound = -1e300;
  for (const CavityCell& c : cells) {
    min_tau = std::min(min_tau, c.report.value);
    if (c.alpha == 1.0) worst_edge = std::max(worst_edge, std::abs(c.report.value));
    const double bound = eof_lower_bound({std::sqrt(c.report.component("ef2_c1c2")),
                                          std::sqrt(c.report.component("ef2_c1r1"))});
    worst_bound = std::max(worst_bound, bound - std::sqrt(c.report.component("ef2_c1_c2r1")));
  }
  v.require(min_tau >= -1e-6, "min tau2 " + fmt("%.2e", min_tau));
  v.require(worst_edge == 0.0, "alpha=1 edge " + fmt("%.2e", worst_edge));
  v.require(worst_bound <= 1e-6, "bound exceeded by " + fmt("%.2e", worst_bound));
  v.note("min tau2 = " + fmt("%.2e", min_tau));
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::vector<std::pair<std::vector<std::string>, std::string>> runs = {
      {{"verify-propositions"}, "propositions.csv"},
      {{"--samples", "300", "montecarlo", "pure3"}, "montecarlo_pure3.csv"},
      {{"--samples", "300", "montecarlo", "pure4"}, "montecarlo_pure4.csv"},
      {{"--samples", "50", "montecarlo", "rank2mixed3"}, "montecarlo_rank2mixed3.csv"},
      {{"--grid", "6x1", "fig1"}, "fig1.csv"},
      {{"fig2"}, "fig2.csv"},
      {{"table1"}, "table1.csv"},
      {{"locc"}, "locc.csv"},
  };
  int index = 0;
  for (const auto& [args, file] : runs) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path dir = scratch("det_" + std::to_string(index) + "_" + std::to_string(rep));
      std::vector<std::string> full = {"--seed", "777", "--out", dir.string()};
      full.insert(full.end(), args.begin(), args.end());
      const int code = run_cli(full);
      const std::string csv = oracle::slurp((dir / file).string());
      v.require(code == cli::kExitOk && !csv.empty(), file + " run failed");
      if (rep == 0) {
        first = csv;
      } else {
        v.require(csv == first, file + " differs between runs");
      }
    }
    ++index;
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"W_N/all-ones mixture values", table1},
      {"GHZ/W constants", constants},
      {"W-state EoF score", w_score},
      {"LOCC counterexample", locc},
      {"squared-EoF propositions", propositions},
      {"Monte Carlo inequalities", montecarlo},
      {"oracle equivalence", oracle_equivalence},
      {"GHZ/W mixture curve", fig1},
      {"cavity-reservoir surface", fig2},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("criterion %zu: %s  %s (%.1f s) %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
