#include "monogamy/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "monogamy/error.hpp"
#include "monogamy/measures.hpp"

namespace monogamy {
namespace {

constexpr double kNegligibleOutcome = 1e-12;

// rho written as 2x2 blocks over the measured qubit: block(r, s) = <r| rho |s>
// acting on the unmeasured subsystems.
class MeasuredBlocks {
 public:
  MeasuredBlocks(const DensityMatrix& rho, int measured) {
    if (measured < 0 || measured >= rho.num_subsystems()) {
      throw ContractViolation("measured subsystem index out of range");
    }
    if (rho.dims()[measured] != 2) throw ContractViolation("measured subsystem must be a qubit");
    if (rho.num_subsystems() < 2) throw ContractViolation("need at least one unmeasured subsystem");
    const Subsystems rest = complement({measured}, rho.num_subsystems());
    const Eigen::MatrixXi table = subsystem_index_table(rho.dims(), rest);
    const Eigen::Index d = table.rows();
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) {
        Matrix b(d, d);
        for (Eigen::Index a = 0; a < d; ++a) {
          for (Eigen::Index c = 0; c < d; ++c) b(a, c) = rho(table(a, r), table(c, s));
        }
        blocks_[r][s] = std::move(b);
      }
    }
  }

  double conditional_entropy(const QubitMeasurement& meas) const {
    double total = 0.0;
    for (const Eigen::Vector2cd& v : meas.basis()) {
      Matrix sigma = std::norm(v(0)) * blocks_[0][0] + std::norm(v(1)) * blocks_[1][1] +
                     std::conj(v(0)) * v(1) * blocks_[0][1] +
                     std::conj(v(1)) * v(0) * blocks_[1][0];
      const double p = sigma.trace().real();
      if (p < kNegligibleOutcome) continue;
      sigma /= p;
      sigma = 0.5 * (sigma + sigma.adjoint()).eval();
      total += p * von_neumann_entropy(sigma);
    }
    return total;
  }

 private:
  Matrix blocks_[2][2];
};

QubitMeasurement canonical(double theta, double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta = std::remainder(theta, two_pi);  // (-pi, pi]
  if (theta < 0.0) {
    theta = -theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  return {theta, phi};
}

struct Minimum {
  double value;
  QubitMeasurement meas;
};

Minimum minimize_measurement(const MeasuredBlocks& blocks, const DiscordOptions& options) {
  if (options.theta_steps < 2 || options.phi_steps < 1) {
    throw ContractViolation("measurement grid too small");
  }
  const double dtheta = std::numbers::pi / (options.theta_steps - 1);
  const double dphi = 2.0 * std::numbers::pi / options.phi_steps;

  std::vector<double> grid(static_cast<std::size_t>(options.theta_steps) * options.phi_steps);
  for_each_index(options.execution, options.theta_steps, [&](std::ptrdiff_t i) {
    for (int j = 0; j < options.phi_steps; ++j) {
      grid[i * options.phi_steps + j] = blocks.conditional_entropy({i * dtheta, j * dphi});
    }
  });
  const auto it = std::min_element(grid.begin(), grid.end());
  const auto flat = static_cast<int>(it - grid.begin());
  double theta = (flat / options.phi_steps) * dtheta;
  double phi = (flat % options.phi_steps) * dphi;
  double best = *it;

  // Step-halving compass refinement.
  double step = std::max(dtheta, dphi);
  for (int moves = 0; moves < 2000 && step > 1e-10; ++moves) {
    bool moved = false;
    for (const auto& [dt, dp] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
      const double t = theta + dt * step;
      const double p = phi + dp * step;
      const double v = blocks.conditional_entropy({t, p});
      if (v < best - options.tolerance * 1e-3) {
        best = v;
        theta = t;
        phi = p;
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return {best, canonical(theta, phi)};
}

}  // namespace

std::array<Eigen::Vector2cd, 2> QubitMeasurement::basis() const {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e = std::polar(1.0, phi);
  Eigen::Vector2cd first(c, e * s);
  Eigen::Vector2cd second(-std::conj(e) * s, c);
  return {first, second};
}

double conditional_entropy_after_measurement(const DensityMatrix& rho, int measured,
                                             const QubitMeasurement& meas) {
  return MeasuredBlocks(rho, measured).conditional_entropy(meas);
}

DiscordResult discord(const DensityMatrix& rho, int measured, const DiscordOptions& options) {
  const MeasuredBlocks blocks(rho, measured);
  const Minimum min = minimize_measurement(blocks, options);
  const double s_joint = von_neumann_entropy(rho);
  const double s_measured = von_neumann_entropy(partial_trace(rho, {measured}));
  DiscordResult out;
  out.measured_conditional_entropy = min.value;
  out.measurement = min.meas;
  out.conditional_entropy = s_joint - s_measured;
  out.value = min.value - out.conditional_entropy;
  return out;
}

KoashiWinterResult koashi_winter(const DensityMatrix& rho, int focus, const DiscordOptions& options) {
  const int n = rho.num_subsystems();
  if (focus < 0 || focus >= n) throw ContractViolation("focus subsystem out of range");
  if (n < 2) throw ContractViolation("Koashi-Winter route needs at least two subsystems");
  const int rank = numerical_rank(rho);
  KoashiWinterResult out;
  out.rank = rank;
  const PureState purified = purify(rho);
  if (rank <= 1) {
    // The ancilla has dimension 1, so the purification is the state itself.
    const PureState psi(purified.amplitudes(), rho.dims());
    out.eof = eof_pure_bipartite(psi, {focus});
    return out;
  }
  if (rank > 2) {
    throw UnsupportedRank("Koashi-Winter route needs rank <= 2 (purifying system is a qubit)",
                          rank);
  }
  // Reduced state of (focus, R); R is the last subsystem of the purification.
  const DensityMatrix focus_r = reduced_state(purified, {focus, n});
  const Minimum min = minimize_measurement(MeasuredBlocks(focus_r, 1), options);
  out.eof = min.value;
  out.measurement = min.meas;
  return out;
}

double eof_via_koashi_winter(const DensityMatrix& rho, int focus, const DiscordOptions& options) {
  return koashi_winter(rho, focus, options).eof;
}

double eof_c1_c2r1_closed_form(double alpha, double kappa_t) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ContractViolation("alpha outside [0, 1]");
  if (!(kappa_t >= 0.0)) throw ContractViolation("kappa*t must be non-negative");
  const double b2 = 1.0 - alpha * alpha;
  const double x2 = std::exp(-kappa_t);  // xi^2
  const double c2 = -std::expm1(-kappa_t);  // chi^2
  const double q = std::sqrt(std::max(0.0, 1.0 - 4.0 * b2 * x2 * (x2 + b2 * c2 - b2 * x2)));
  return binary_entropy(0.5 * (1.0 - q));
}

}  // namespace monogamy
