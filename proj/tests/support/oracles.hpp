#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the library's numerical kernels.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Eigenvalues (descending) of a Hermitian matrix by cyclic Jacobi on the
// real symmetric embedding [[Re, -Im], [Im, Re]].
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m);

// Partial trace by explicit multi-index loops; qubit 0 is the most
// significant digit.
CMatrix partial_trace(const CMatrix& rho, const std::vector<int>& dims, const std::vector<int>& keep);

// Wootters concurrence from the non-Hermitian product rho * rho~ with a
// general complex eigensolver.
double concurrence(const CMatrix& rho);

double binary_entropy(double x);
double entropy_bits(const Eigen::VectorXd& eigenvalues);

// [h((1 + sqrt(1 - x)) / 2)]^2 directly from the definition.
double sef(double x);

// 4 |Det| from the Cayley hyperdeterminant of a three-qubit amplitude vector.
double three_tangle(const CVector& psi);

// Entanglement entropy of qubit `focus` of a pure state, via oracle partial trace.
double pure_focus_entropy(const CVector& psi, int qubits, int focus);

// Reads a whole file as bytes.
std::string slurp(const std::string& path);

}  // namespace oracle
