#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monogamy/convex_roof.hpp"
#include "monogamy/discord.hpp"
#include "monogamy/linalg.hpp"

namespace monogamy {

// A named scalar together with the components it was computed from.
struct IndicatorReport {
  std::string name;
  double value = 0.0;
  std::vector<std::pair<std::string, double>> components;
  std::map<std::string, std::string> metadata;

  double component(const std::string& key) const;  // throws std::out_of_range
};

// Pure-state squared-EoF monogamy residual
//   E_f^2(focus | rest) - sum_{j != focus} E_f^2(rho_{focus j}).
double tau1_pure(const PureState& psi, int focus);

enum class EofRoute { automatic, schmidt, koashi_winter, convex_roof };

std::string to_string(EofRoute route);

struct Tau2Options {
  EofRoute route = EofRoute::automatic;
  RoofConfig roof;
  DiscordOptions discord;
};

// E_f^2(focus | rest) - sum_j E_f^2(focus, j). Automatic routing: rank 1 uses
// the Schmidt entropy, rank 2 Koashi-Winter, anything else the convex roof.
// Components: "ef2_focus_rest" and one "ef2_pair_<j>" per other qubit.
IndicatorReport tau2(const DensityMatrix& rho, int focus, const Tau2Options& options = {});

// Mean of tau2 over every focus qubit.
double tau2_partition_avg(const DensityMatrix& rho, const Tau2Options& options = {});

// sqrt(sum_j E_f^2(rho_{focus j})): a lower bound on E_f(focus | rest).
double eof_lower_bound(const std::vector<double>& pairwise_eofs);

// Unsquared score E_f(focus | rest) - sum_j E_f(focus, j).
double monogamy_score_ef(const PureState& psi, int focus);
double monogamy_score_ef(const DensityMatrix& rho, int focus, const Tau2Options& options = {});

// The two links of the pure-state chain
//   E_f^2(C^2_{focus|rest}) >= E_f^2(sum_j C^2_{focus j}) >= sum_j E_f^2(C^2_{focus j}).
struct MonogamyChain {
  double first = 0.0;   // E_f^2(C^2_{focus|rest}) - E_f^2(sum C^2)
  double second = 0.0;  // E_f^2(sum C^2) - sum E_f^2(C^2)
  double min() const { return first < second ? first : second; }
};
MonogamyChain sef_monogamy_chain(const PureState& psi, int focus);
double sef_monogamy_check_pure(const PureState& psi, int focus);

// E_f^2(focus | rest) - sum_j E_f^2(pairs) for rank <= 2 states through the
// Koashi-Winter route. Throws UnsupportedRank for higher rank.
double sef_monogamy_check_mixed_rank2(const DensityMatrix& rho, int focus,
                                      const DiscordOptions& options = {});

// (N/(N+1)) [E_f^2(C^2 = 4(N-1)/N^2) - (N-1) E_f^2(C^2 = 4/N^2)], N >= 3.
double table1_value(int n);

// Constants of the GHZ/W mixture, recomputed from first principles.
struct GhzWConstants {
  double p0;   // root of the pure three-tangle along psi_j_p(0, p)
  double s_p;  // tau1_pure(psi_j_p(0, p0), 0)
  double s_w;  // tau1_pure(W3, 0)
};
const GhzWConstants& ghzw_constants();

// (p/p0) s_p + (1 - p/p0) s_w for p in [0, p0).
double tau1_ghzw_closed_form(double p);

// Residual classification: values in [-tol, 0) are reported as 0 and flagged
// as clamped; values below -tol are violations.
struct ResidualVerdict {
  double reported = 0.0;
  bool clamped = false;
  bool violated = false;
};
ResidualVerdict classify_residual(double raw, double tolerance);

}  // namespace monogamy
