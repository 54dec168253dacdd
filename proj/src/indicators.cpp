#include "monogamy/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monogamy/error.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/states.hpp"

namespace monogamy {
namespace {

void require_qubits(const Dims& dims, const char* what) {
  for (int d : dims) {
    if (d != 2) throw ContractViolation(std::string(what) + " needs an all-qubit state");
  }
}

void require_focus(int focus, int n) {
  if (focus < 0 || focus >= n) throw ContractViolation("focus qubit out of range");
}

PureState dominant_pure(const DensityMatrix& rho) {
  const EigenSystem es = hermitian_eigendecompose(rho.matrix());
  return PureState::normalized(es.vectors.col(0), rho.dims());
}

struct FocusEof {
  double value;
  EofRoute route;
  int rank;
};

FocusEof focus_eof(const DensityMatrix& rho, int focus, const Tau2Options& options) {
  const int rank = numerical_rank(rho);
  EofRoute route = options.route;
  if (route == EofRoute::automatic) {
    route = rank <= 1 ? EofRoute::schmidt : rank == 2 ? EofRoute::koashi_winter : EofRoute::convex_roof;
  }
  switch (route) {
    case EofRoute::schmidt:
      if (rank > 1) throw UnsupportedRank("Schmidt route needs a pure state", rank);
      return {eof_pure_bipartite(dominant_pure(rho), {focus}), route, rank};
    case EofRoute::koashi_winter:
      return {eof_via_koashi_winter(rho, focus, options.discord), route, rank};
    case EofRoute::convex_roof:
      return {eof_mixed(rho, {focus}, options.roof), route, rank};
    case EofRoute::automatic:
      break;
  }
  throw ContractViolation("unreachable EoF route");
}

}  // namespace

double IndicatorReport::component(const std::string& key) const {
  for (const auto& [name, v] : components) {
    if (name == key) return v;
  }
  throw std::out_of_range("no component named " + key);
}

std::string to_string(EofRoute route) {
  switch (route) {
    case EofRoute::automatic: return "automatic";
    case EofRoute::schmidt: return "schmidt";
    case EofRoute::koashi_winter: return "koashi-winter";
    case EofRoute::convex_roof: return "convex-roof";
  }
  return "unknown";
}

double tau1_pure(const PureState& psi, int focus) {
  require_qubits(psi.dims(), "tau1_pure");
  const int n = psi.num_subsystems();
  require_focus(focus, n);
  const double e = eof_pure_bipartite(psi, {focus});
  double residual = e * e;
  for (int j = 0; j < n; ++j) {
    if (j == focus) continue;
    const double ej = pair_eof(psi, focus, j);
    residual -= ej * ej;
  }
  return residual;
}

IndicatorReport tau2(const DensityMatrix& rho, int focus, const Tau2Options& options) {
  require_qubits(rho.dims(), "tau2");
  const int n = rho.num_subsystems();
  require_focus(focus, n);

  const FocusEof whole = focus_eof(rho, focus, options);
  IndicatorReport report;
  report.name = "tau2";
  report.components.emplace_back("ef2_focus_rest", whole.value * whole.value);
  double value = whole.value * whole.value;
  for (int j = 0; j < n; ++j) {
    if (j == focus) continue;
    const double e = eof_two_qubit(partial_trace(rho, {focus, j}));
    report.components.emplace_back("ef2_pair_" + std::to_string(j), e * e);
    value -= e * e;
  }
  report.value = value;
  report.metadata["focus"] = std::to_string(focus);
  report.metadata["route"] = to_string(whole.route);
  report.metadata["rank"] = std::to_string(whole.rank);
  return report;
}

double tau2_partition_avg(const DensityMatrix& rho, const Tau2Options& options) {
  const int n = rho.num_subsystems();
  double acc = 0.0;
  for (int focus = 0; focus < n; ++focus) acc += tau2(rho, focus, options).value;
  return acc / n;
}

double eof_lower_bound(const std::vector<double>& pairwise_eofs) {
  double acc = 0.0;
  for (double e : pairwise_eofs) {
    if (!(e >= 0.0 && e <= 1.0)) throw ContractViolation("pairwise EoF outside [0, 1]");
    acc += e * e;
  }
  return std::sqrt(acc);
}

double monogamy_score_ef(const PureState& psi, int focus) {
  require_qubits(psi.dims(), "monogamy_score_ef");
  const int n = psi.num_subsystems();
  require_focus(focus, n);
  double score = eof_pure_bipartite(psi, {focus});
  for (int j = 0; j < n; ++j) {
    if (j != focus) score -= pair_eof(psi, focus, j);
  }
  return score;
}

double monogamy_score_ef(const DensityMatrix& rho, int focus, const Tau2Options& options) {
  const IndicatorReport report = tau2(rho, focus, options);
  double score = std::sqrt(report.components.front().second);
  for (std::size_t k = 1; k < report.components.size(); ++k) {
    score -= std::sqrt(report.components[k].second);
  }
  return score;
}

MonogamyChain sef_monogamy_chain(const PureState& psi, int focus) {
  require_qubits(psi.dims(), "sef_monogamy_chain");
  const int n = psi.num_subsystems();
  require_focus(focus, n);
  const double c_all = concurrence_pure_bipartite(psi, {focus});
  double sum_c2 = 0.0;
  double sum_sef = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j == focus) continue;
    const double c = pair_concurrence(psi, focus, j);
    sum_c2 += c * c;
    sum_sef += sef(c * c);
  }
  // CKW guarantees sum_c2 <= C^2 <= 1 up to rounding.
  const double sef_sum = sef(std::min(sum_c2, 1.0));
  return {sef(std::min(c_all * c_all, 1.0)) - sef_sum, sef_sum - sum_sef};
}

double sef_monogamy_check_pure(const PureState& psi, int focus) {
  return sef_monogamy_chain(psi, focus).min();
}

double sef_monogamy_check_mixed_rank2(const DensityMatrix& rho, int focus,
                                      const DiscordOptions& options) {
  Tau2Options opts;
  opts.route = EofRoute::koashi_winter;
  opts.discord = options;
  return tau2(rho, focus, opts).value;
}

double table1_value(int n) {
  if (n < 3) throw ContractViolation("table1_value needs N >= 3");
  const double nn = n;
  return nn / (nn + 1.0) * (sef(4.0 * (nn - 1.0) / (nn * nn)) - (nn - 1.0) * sef(4.0 / (nn * nn)));
}

const GhzWConstants& ghzw_constants() {
  static const GhzWConstants constants = [] {
    const double p0 = find_p0();
    return GhzWConstants{p0, tau1_pure(psi_j_p(0, p0), 0), tau1_pure(w3(), 0)};
  }();
  return constants;
}

double tau1_ghzw_closed_form(double p) {
  const GhzWConstants& k = ghzw_constants();
  if (!(p >= 0.0 && p < k.p0)) throw ContractViolation("tau1_ghzw_closed_form needs p in [0, p0)");
  const double a = p / k.p0;
  return a * k.s_p + (1.0 - a) * k.s_w;
}

ResidualVerdict classify_residual(double raw, double tolerance) {
  if (raw >= 0.0) return {raw, false, false};
  if (raw >= -tolerance) return {0.0, true, false};
  return {raw, false, true};
}

}  // namespace monogamy
