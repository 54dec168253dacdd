#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "monogamy/linalg.hpp"
#include "monogamy/parallel.hpp"

namespace monogamy {

// rho = sum_i p_i |psi_i><psi_i|.
struct Decomposition {
  std::vector<double> probabilities;
  std::vector<PureState> components;

  Matrix mixture() const;
  // Probability-weighted average of a pure-state functional.
  double average(const std::function<double(const PureState&)>& f) const;
};

struct RoofConfig {
  int ensemble_size = 0;  // fallback start only; 0 selects max(r, min(r^2, 8)) for rank r
  int restarts = 4;
  int max_iterations = 2000;  // full pair sweeps per restart
  double tolerance = 1e-8;    // stop when a sweep improves less than this
  int pool_size = 0;      // LP candidate states; 0 selects 500 r^2
  int zoom_rounds = 400;  // cap on LP re-solves over perturbations of the support
  std::uint64_t seed = 0x6d6f6e6f67616d79ULL;
  Execution execution = Execution::parallel;
};

using PureFunctional = std::function<double(const PureState&)>;

struct RoofResult {
  double value = 0.0;  // an upper bound on the convex roof
  Decomposition decomposition;
  bool converged = true;
  int best_restart = 0;
};

// Ensemble {W_ik sqrt(l_k) |e_k>} for an m x r isometry W over the nonzero
// eigenpairs (l_k, e_k) of rho.
Decomposition decomposition_from_isometry(const DensityMatrix& rho, const Matrix& isometry);

// Minimizes sum_i p_i f(psi_i) over decompositions of rho.
//
// With rho = E L E^dagger, an ensemble is a set of support states E c_k with
// weights w_k such that sum_k w_k c_k c_k^dagger = L. Over a finite pool of
// candidates c that is a linear program in w. Each restart k draws its own
// pool (the eigenbasis plus pool_size Haar-random vectors, seeded by
// derive_seed(seed, k)), solves the LP, then re-solves on perturbations of the
// optimal support, halving the perturbation whenever a round stops paying off.
//
// The LP support is then polished by sweeping over member pairs, replacing
// (v_i, v_j) by a 2x2 unitary mix
//   v_i' = cos t v_i - e^{-i phi} sin t v_j,   v_j' = e^{i phi} sin t v_i + cos t v_j
// whenever that lowers the pair's cost. Such moves keep sum_i |v_i><v_i|
// fixed, so every iterate is an exact decomposition of rho. A random
// isometry of size ensemble_size replaces the LP start if the LP fails.
RoofResult minimize_roof(const DensityMatrix& rho, const PureFunctional& cost,
                         const RoofConfig& config = {});

// Convex-roof entanglement of formation across side | rest.
double eof_mixed(const DensityMatrix& rho, const Subsystems& side, const RoofConfig& config = {});

// min sum_i p_i [E_f^2(focus|rest) - sum_j E_f^2(focus, j)] over decompositions.
double tau1_mixed(const DensityMatrix& rho, int focus, const RoofConfig& config = {});
RoofResult tau1_mixed_detailed(const DensityMatrix& rho, int focus, const RoofConfig& config = {});

// As tau1_mixed with the pure-state residual averaged over every focus qubit.
double tau1_global(const DensityMatrix& rho, const RoofConfig& config = {});

// Convex roof of the pure three-tangle.
double three_tangle_mixed(const DensityMatrix& rho, const RoofConfig& config = {});

// p0 in [0.5, 0.7] where the three-tangle of psi_j_p(0, p) vanishes.
double find_p0();

}  // namespace monogamy
