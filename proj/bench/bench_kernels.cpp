// Serial reference versus OpenMP for each data-parallel kernel. The second
// benchmark argument selects the policy: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <vector>

#include "monogamy/convex_roof.hpp"
#include "monogamy/discord.hpp"
#include "monogamy/dynamics.hpp"
#include "monogamy/indicators.hpp"
#include "monogamy/states.hpp"

namespace {

using namespace monogamy;

Execution policy(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

void BM_RoofRestarts(benchmark::State& state) {
  const DensityMatrix rho = random_mixed({2, 2, 2}, 3, 11);
  RoofConfig config;
  config.restarts = static_cast<int>(state.range(0));
  config.execution = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(tau1_mixed(rho, 0, config));
  label(state);
}
BENCHMARK(BM_RoofRestarts)->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_CavityGrid(benchmark::State& state) {
  const auto alphas = linspace(0.0, 1.0, static_cast<int>(state.range(0)));
  const auto kts = linspace(0.0, 3.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tau2_grid_c1_c2r1(alphas, kts, policy(state)));
  label(state);
}
BENCHMARK(BM_CavityGrid)->Args({50, 0})->Args({50, 1})->Unit(benchmark::kMillisecond);

void BM_DiscordGrid(benchmark::State& state) {
  const DensityMatrix rho = random_mixed({2, 2, 2}, 2, 5);
  DiscordOptions options;
  options.theta_steps = static_cast<int>(state.range(0));
  options.phi_steps = 2 * options.theta_steps;
  options.execution = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(discord(rho, 2, options));
  label(state);
}
BENCHMARK(BM_DiscordGrid)->Args({64, 0})->Args({64, 1})->Unit(benchmark::kMillisecond);

void BM_MonteCarloPure(benchmark::State& state) {
  const auto n = static_cast<std::ptrdiff_t>(state.range(0));
  std::vector<double> residuals(static_cast<std::size_t>(n));
  for (auto _ : state) {
    for_each_index(policy(state), n, [&](std::ptrdiff_t k) {
      const PureState psi = haar_random_pure({2, 2, 2, 2}, derive_seed(1, static_cast<std::uint64_t>(k)));
      residuals[static_cast<std::size_t>(k)] = tau1_pure(psi, 0);
    });
    benchmark::DoNotOptimize(residuals.data());
  }
  label(state);
}
BENCHMARK(BM_MonteCarloPure)->Args({1000, 0})->Args({1000, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
