#include "monogamy/dynamics.hpp"

#include <cmath>

#include "monogamy/discord.hpp"
#include "monogamy/error.hpp"
#include "monogamy/measures.hpp"

namespace monogamy {
namespace {

constexpr double kDroppedBranch = 1e-15;

Matrix embed_operator(const Eigen::Matrix2cd& op, int subsystem, const Dims& dims) {
  Matrix full = Matrix::Identity(1, 1);
  for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
    const Matrix factor = k == subsystem ? Matrix(op) : Matrix::Identity(dims[k], dims[k]);
    Matrix next(full.rows() * factor.rows(), full.cols() * factor.cols());
    for (Eigen::Index i = 0; i < full.rows(); ++i) {
      for (Eigen::Index j = 0; j < full.cols(); ++j) {
        next.block(i * factor.rows(), j * factor.cols(), factor.rows(), factor.cols()) =
            full(i, j) * factor;
      }
    }
    full = std::move(next);
  }
  return full;
}

}  // namespace

PovmPair PovmPair::make(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
    throw ContractViolation("POVM parameters must lie in [0, 1]");
  }
  return PovmPair{a, b};
}

Eigen::Matrix2cd PovmPair::m1() const {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Eigen::Matrix2cd PovmPair::m2() const {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::sqrt(1.0 - a * a);
  m(1, 1) = std::sqrt(1.0 - b * b);
  return m;
}

std::vector<PovmBranch> apply_local_povm(const DensityMatrix& rho, int subsystem,
                                         const PovmPair& povm) {
  if (subsystem < 0 || subsystem >= rho.num_subsystems()) {
    throw ContractViolation("POVM subsystem out of range");
  }
  if (rho.dims()[subsystem] != 2) throw ContractViolation("POVM subsystem must be a qubit");
  const PovmPair checked = PovmPair::make(povm.a, povm.b);

  std::vector<PovmBranch> out;
  for (const Eigen::Matrix2cd& op : {checked.m1(), checked.m2()}) {
    const Matrix m = embed_operator(op, subsystem, rho.dims());
    Matrix branch = m * rho.matrix() * m.adjoint();
    const double p = branch.trace().real();
    if (p < kDroppedBranch) continue;
    branch /= p;
    branch = 0.5 * (branch + branch.adjoint()).eval();
    out.push_back({p, DensityMatrix::trusted(std::move(branch), rho.dims())});
  }
  return out;
}

IndicatorReport tau2_c1_c2r1(const CavityParams& params) {
  const PureState psi = cavity_output(params);
  const double whole = eof_c1_c2r1_closed_form(params.alpha, params.kappa_t);
  const double c1c2 = pair_eof(psi, kCavity1, kCavity2);
  const double c1r1 = pair_eof(psi, kCavity1, kReservoir1);

  IndicatorReport report;
  report.name = "tau2_c1_c2r1";
  report.components = {{"ef2_c1_c2r1", whole * whole},
                       {"ef2_c1c2", c1c2 * c1c2},
                       {"ef2_c1r1", c1r1 * c1r1}};
  report.value = whole * whole - c1c2 * c1c2 - c1r1 * c1r1;
  report.metadata["route"] = "closed-form";
  return report;
}

std::vector<CavityCell> tau2_grid_c1_c2r1(const std::vector<double>& alphas,
                                          const std::vector<double>& kappa_ts,
                                          Execution execution) {
  const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(kappa_ts.size());
  std::vector<CavityCell> cells(alphas.size() * kappa_ts.size());
  for_each_index(execution, static_cast<std::ptrdiff_t>(cells.size()), [&](std::ptrdiff_t k) {
    const double alpha = alphas[k / cols];
    const double kt = kappa_ts[k % cols];
    cells[k] = CavityCell{alpha, kt, tau2_c1_c2r1(CavityParams::make(alpha, kt))};
  });
  return cells;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw ContractViolation("linspace needs at least one point");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

LoccReport locc_counterexample(const DiscordOptions& discord, const RoofConfig& roof) {
  LoccReport out;
  out.params = CavityParams::make(0.9, 0.9);
  out.povm = PovmPair::make(4.0 / 5.0, 3.0 / 7.0);

  const PureState psi = cavity_output(out.params);
  // (c1, c2, r2); the traced reservoir r1 is the purifying qubit.
  const DensityMatrix rho = reduced_state(psi, {kCavity1, kCavity2, kReservoir2});

  Tau2Options options;
  options.route = EofRoute::automatic;
  options.discord = discord;
  options.roof = roof;
  out.before = tau2(rho, 0, options);

  for (const PovmBranch& branch : apply_local_povm(rho, 0, out.povm)) {
    IndicatorReport r = tau2(branch.state, 0, options);
    if (r.metadata["route"] == to_string(EofRoute::convex_roof)) r.metadata["fallback"] = "rank>2";
    out.average += branch.probability * r.value;
    out.branches.push_back({branch.probability, std::move(r)});
  }
  out.difference = out.average - out.before.value;
  return out;
}

}  // namespace monogamy
