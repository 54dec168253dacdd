#pragma once

#include <string>
#include <vector>

#include "monogamy/indicators.hpp"
#include "monogamy/parallel.hpp"
#include "monogamy/states.hpp"

namespace monogamy {

// Two-outcome diagonal local POVM M1 = diag(a, b), M2 = diag(sqrt(1-a^2), sqrt(1-b^2)).
struct PovmPair {
  double a = 1.0;
  double b = 1.0;

  static PovmPair make(double a, double b);  // a, b in [0, 1]
  Eigen::Matrix2cd m1() const;
  Eigen::Matrix2cd m2() const;
};

struct PovmBranch {
  double probability;
  DensityMatrix state;  // M rho M^dagger / probability
};

// Branches with probability below 1e-15 are dropped.
std::vector<PovmBranch> apply_local_povm(const DensityMatrix& rho, int subsystem,
                                         const PovmPair& povm);

// One grid cell: tau2 of rho_{c1 c2 r1} with focus c1. E_f(c1 | c2 r1) comes
// from the closed form, the pair terms from Wootters on the reduced states.
// Components: ef2_c1_c2r1, ef2_c1c2, ef2_c1r1.
IndicatorReport tau2_c1_c2r1(const CavityParams& params);

struct CavityCell {
  double alpha;
  double kappa_t;
  IndicatorReport report;
};

// Row-major over (alphas, kappa_ts); output order is independent of the
// execution policy.
std::vector<CavityCell> tau2_grid_c1_c2r1(const std::vector<double>& alphas,
                                          const std::vector<double>& kappa_ts,
                                          Execution execution = Execution::parallel);

// n evenly spaced points covering [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, int n);

struct LoccBranchReport {
  double probability;
  IndicatorReport report;
};

struct LoccReport {
  CavityParams params;
  PovmPair povm;
  IndicatorReport before;
  std::vector<LoccBranchReport> branches;
  double average = 0.0;     // sum_i p_i tau2(rho_i)
  double difference = 0.0;  // average - before
};

// tau2(rho_{c1 c2 r2}, focus c1) at alpha = 9/10, kappa t = 0.9 before and
// after the local POVM a = 4/5, b = 3/7 on c1. E_f(c1 | c2 r2) uses the
// Koashi-Winter route with r1 as the purifying qubit, falling back to the
// convex roof if a branch has numerical rank above 2.
LoccReport locc_counterexample(const DiscordOptions& discord = {}, const RoofConfig& roof = {});

}  // namespace monogamy
