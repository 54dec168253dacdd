#pragma once

#include <array>

#include "monogamy/linalg.hpp"
#include "monogamy/parallel.hpp"

namespace monogamy {

// Rank-1 projective measurement on a qubit. The first projector is onto
// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, the second onto its orthogonal
// complement.
struct QubitMeasurement {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  std::array<Eigen::Vector2cd, 2> basis() const;
};

// sum_k p_k S(rho_rest | k) after measuring qubit `measured`. Outcomes with
// p_k < 1e-12 contribute nothing.
double conditional_entropy_after_measurement(const DensityMatrix& rho, int measured,
                                             const QubitMeasurement& meas);

struct DiscordOptions {
  int theta_steps = 64;
  int phi_steps = 128;
  double tolerance = 1e-8;  // objective change that ends the local refinement
  Execution execution = Execution::serial;
};

struct DiscordResult {
  double value = 0.0;  // D(rest | measured)
  QubitMeasurement measurement;
  double measured_conditional_entropy = 0.0;  // min_meas sum_k p_k S(rest | k)
  double conditional_entropy = 0.0;           // S(rest, measured) - S(measured)
};

// Quantum discord with projective measurements on qubit `measured`.
DiscordResult discord(const DensityMatrix& rho, int measured, const DiscordOptions& options = {});

struct KoashiWinterResult {
  double eof = 0.0;
  QubitMeasurement measurement;
  int rank = 1;
};

// E_f(focus | rest) = D(focus | R) + S(focus | R), with R the purifying
// system. Requires rank(rho) <= 2 so that R is a qubit; throws UnsupportedRank
// otherwise.
KoashiWinterResult koashi_winter(const DensityMatrix& rho, int focus,
                                 const DiscordOptions& options = {});
double eof_via_koashi_winter(const DensityMatrix& rho, int focus,
                             const DiscordOptions& options = {});

// Closed form for E_f(c1 | c2 r1) of the cavity-reservoir output state.
double eof_c1_c2r1_closed_form(double alpha, double kappa_t);

}  // namespace monogamy
