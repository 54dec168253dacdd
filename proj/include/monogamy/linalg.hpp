#pragma once

// Dense complex linear algebra over tensor products of small subsystems.
//
// Amplitude indexing is most-significant-first: for dims (d0, d1, ..., dk)
// the basis state |i0 i1 ... ik> sits at index
//   i0 * (d1*...*dk) + i1 * (d2*...*dk) + ... + ik,
// so qubit 0 is the highest bit.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace monogamy {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Subsystem dimensions, most significant first.
using Dims = std::vector<int>;
// A set of subsystem indices into a Dims list.
using Subsystems = std::vector<int>;

// Eigenvalues with |lambda| below this are treated as exact zeros before
// logarithms and square roots; also the rank threshold for purification.
inline constexpr double kEigenClamp = 1e-10;
inline constexpr double kValidationTolerance = 1e-10;

long total_dimension(const Dims& dims);

class PureState {
 public:
  // Throws ContractViolation unless prod(dims) == size and the norm is 1.
  PureState(Vector amplitudes, Dims dims);

  // Normalizes before validating. Zero vectors are rejected.
  static PureState normalized(Vector amplitudes, Dims dims);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  const Dims& dims() const noexcept { return dims_; }
  int num_subsystems() const noexcept { return static_cast<int>(dims_.size()); }
  Eigen::Index dimension() const noexcept { return amplitudes_.size(); }
  Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

 private:
  Vector amplitudes_;
  Dims dims_;
};

class DensityMatrix {
 public:
  // Checks Hermiticity, unit trace and positivity (all within 1e-10).
  DensityMatrix(Matrix entries, Dims dims);

  static DensityMatrix from_pure(const PureState& psi);

  // Skips the eigenvalue check; still verifies shape, Hermiticity and trace.
  // Used on matrices that are PSD by construction (partial traces, mixtures
  // of projectors).
  static DensityMatrix trusted(Matrix entries, Dims dims);

  const Matrix& matrix() const noexcept { return entries_; }
  const Dims& dims() const noexcept { return dims_; }
  int num_subsystems() const noexcept { return static_cast<int>(dims_.size()); }
  Eigen::Index dimension() const noexcept { return entries_.rows(); }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

 private:
  struct NoPositivityCheck {};
  DensityMatrix(Matrix entries, Dims dims, NoPositivityCheck);

  Matrix entries_;
  Dims dims_;
};

struct EigenSystem {
  RealVector values;  // descending
  Matrix vectors;     // orthonormal columns, matching `values`
};

// Throws ContractViolation for non-square or non-Hermitian (1e-10) input.
EigenSystem hermitian_eigendecompose(const Matrix& m);

// Number of eigenvalues above `threshold`.
int numerical_rank(const DensityMatrix& rho, double threshold = kEigenClamp);

// Reduced state on `keep` (any order; the result lists the kept subsystems in
// ascending index order). Throws for empty, duplicate or out-of-range sets.
DensityMatrix partial_trace(const DensityMatrix& rho, const Subsystems& keep);
Matrix partial_trace(const Matrix& rho, const Dims& dims, const Subsystems& keep);

// Reduced state of a pure state, computed as Psi * Psi^dagger without
// forming the full projector.
DensityMatrix reduced_state(const PureState& psi, const Subsystems& keep);
Matrix reduced_matrix(const Vector& amplitudes, const Dims& dims, const Subsystems& keep);

PureState tensor_product(const PureState& a, const PureState& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// Principal square root of a PSD Hermitian matrix. Eigenvalues in
// [-1e-8, 0) are clamped to zero; anything more negative is rejected.
Matrix matrix_sqrt_psd(const Matrix& m);

// Appends an ancilla of dimension rank(rho) and returns sum_k sqrt(l_k)|e_k>|k>.
PureState purify(const DensityMatrix& rho);

struct SchmidtResult {
  RealVector coefficients;  // descending, non-negative
  Matrix left;              // columns span the `side` factor
  Matrix right;             // columns span the complement
};

// Schmidt decomposition across `side` | complement. Both sides must be
// non-empty.
SchmidtResult schmidt_decompose(const PureState& psi, const Subsystems& side);

// Full basis index of (kept multi-index a, traced multi-index t) at
// (a, t); both multi-indices use ascending subsystem order.
Eigen::MatrixXi subsystem_index_table(const Dims& dims, const Subsystems& keep);

// Complement of `side` within [0, n).
Subsystems complement(const Subsystems& side, int n);

}  // namespace monogamy
