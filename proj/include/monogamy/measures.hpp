#pragma once

#include "monogamy/linalg.hpp"

namespace monogamy {

// Entropies are in bits.

// h(x) = -x log2 x - (1-x) log2 (1-x); h(0) = h(1) = 0. Accepts 1e-12 slack.
double binary_entropy(double x);

// -sum l log2 l over eigenvalues above the clamp threshold.
double entropy_of_spectrum(const RealVector& eigenvalues);
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const Matrix& rho);

// Wootters concurrence max{0, s1 - s2 - s3 - s4}, with s_i the square roots
// of the eigenvalues of sqrt(rho) rho~ sqrt(rho), rho~ = (Y x Y) rho* (Y x Y).
double concurrence_two_qubit(const DensityMatrix& rho);
double concurrence_two_qubit(const Matrix& rho);

// Same quantity from an ensemble rho = sum_i |v_i><v_i| of subnormalized
// vectors (columns of `vectors`): s_i are the singular values of the
// symmetric matrix <v_i| Y x Y |v_j*>. Independent of the route above.
double concurrence_from_ensemble(const Matrix& vectors);

// sqrt(2 (1 - tr rho_side^2)).
double concurrence_pure_bipartite(const PureState& psi, const Subsystems& side);

// h((1 + sqrt(1 - C^2)) / 2) for C in [0, 1].
double eof_from_concurrence(double c);
double eof_two_qubit(const DensityMatrix& rho);
double eof_two_qubit(const Matrix& rho);

// Entropy of the reduced state on `side`.
double eof_pure_bipartite(const PureState& psi, const Subsystems& side);

// Squared entanglement of formation as a function of x = C^2, its first and
// second derivatives, and the sign factor M(x) of the second derivative.
double sef(double x);     // x in [0, 1]
double sef_d1(double x);  // x in (0, 1)
double sef_d2(double x);  // x in (0, 1]; the x = 1 value is the limit
double m_function(double x);  // x in (0, 1]

// lim_{x->1} d^2 E_f^2 / dx^2 = (3 - ln 4) / (6 ln^2 2).
double sef_d2_limit_at_one();
// Maximizer of M on (0, 1): 4 / e^3.
double m_function_argmax();

// Three-tangle of a three-qubit pure state as the CKW residual
// C^2_{A|BC} - C^2_{AB} - C^2_{AC}.
double three_tangle_pure(const PureState& psi);

// Cayley hyperdeterminant of the 2x2x2 amplitude tensor; the three-tangle
// equals 4 |Det|. Real for real amplitudes, which gives a signed quantity
// for root finding.
Complex cayley_hyperdeterminant(const PureState& psi);

// C^2_{focus|rest} - sum_{j != focus} C^2_{focus j} for an N-qubit pure state.
double ckw_residual_pure(const PureState& psi, int focus);

// Pairwise reduced state of a multi-qubit pure state.
Matrix pair_reduced(const PureState& psi, int a, int b);

// Columns v_t = <t_rest|psi> with pair_reduced = V V^dagger. Concurrence and
// EoF of the pair go through this ensemble; it is exact and depends smoothly
// on the amplitudes, unlike square roots of near-zero eigenvalues.
Matrix pair_ensemble(const PureState& psi, int a, int b);
double pair_concurrence(const PureState& psi, int a, int b);
double pair_eof(const PureState& psi, int a, int b);

}  // namespace monogamy
