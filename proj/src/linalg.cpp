#include "monogamy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "monogamy/error.hpp"

namespace monogamy {
namespace {

void check_dims(const Dims& dims) {
  if (dims.empty()) throw ContractViolation("dims must be non-empty");
  for (int d : dims) {
    if (d < 1) throw ContractViolation("subsystem dimension must be positive");
  }
}

double hermitian_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Subsystems checked_sorted(const Subsystems& keep, int n) {
  if (keep.empty()) throw ContractViolation("subsystem set must be non-empty");
  Subsystems sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("subsystem set contains duplicates");
  }
  if (sorted.front() < 0 || sorted.back() >= n) {
    throw ContractViolation("subsystem index out of range");
  }
  return sorted;
}

}  // namespace

Eigen::MatrixXi subsystem_index_table(const Dims& dims, const Subsystems& keep) {
  const int n = static_cast<int>(dims.size());
  const Subsystems kept = checked_sorted(keep, n);
  const Subsystems traced = complement(kept, n);

  std::vector<long> stride(n);
  long s = 1;
  for (int k = n - 1; k >= 0; --k) {
    stride[k] = s;
    s *= dims[k];
  }

  auto offsets = [&](const Subsystems& sub) {
    long count = 1;
    for (int k : sub) count *= dims[k];
    std::vector<long> out(count);
    for (long i = 0; i < count; ++i) {
      long rem = i;
      long off = 0;
      for (int q = static_cast<int>(sub.size()) - 1; q >= 0; --q) {
        const int k = sub[q];
        off += (rem % dims[k]) * stride[k];
        rem /= dims[k];
      }
      out[i] = off;
    }
    return out;
  };

  const auto a_off = offsets(kept);
  const auto t_off = traced.empty() ? std::vector<long>{0} : offsets(traced);
  Eigen::MatrixXi table(a_off.size(), t_off.size());
  for (std::size_t a = 0; a < a_off.size(); ++a) {
    for (std::size_t t = 0; t < t_off.size(); ++t) {
      table(a, t) = static_cast<int>(a_off[a] + t_off[t]);
    }
  }
  return table;
}

namespace {

Dims select_dims(const Dims& dims, const Subsystems& keep) {
  Subsystems sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  Dims out;
  out.reserve(sorted.size());
  for (int k : sorted) out.push_back(dims[k]);
  return out;
}

Matrix reshape_amplitudes(const Vector& amplitudes, const Dims& dims, const Subsystems& side) {
  const Eigen::MatrixXi table = subsystem_index_table(dims, side);
  Matrix psi(table.rows(), table.cols());
  for (Eigen::Index a = 0; a < table.rows(); ++a) {
    for (Eigen::Index t = 0; t < table.cols(); ++t) psi(a, t) = amplitudes(table(a, t));
  }
  return psi;
}

}  // namespace

long total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<>());
}

Subsystems complement(const Subsystems& side, int n) {
  Subsystems out;
  for (int k = 0; k < n; ++k) {
    if (std::find(side.begin(), side.end(), k) == side.end()) out.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

PureState::PureState(Vector amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  check_dims(dims_);
  if (total_dimension(dims_) != amplitudes_.size()) {
    throw ContractViolation("product of dims (" + std::to_string(total_dimension(dims_)) +
                            ") does not match amplitude count (" +
                            std::to_string(amplitudes_.size()) + ")");
  }
  if (!amplitudes_.allFinite()) throw ContractViolation("non-finite amplitude");
  if (std::abs(amplitudes_.norm() - 1.0) > kValidationTolerance) {
    throw ContractViolation("pure state is not normalized");
  }
}

PureState PureState::normalized(Vector amplitudes, Dims dims) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw ContractViolation("cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(std::move(amplitudes), std::move(dims));
}

DensityMatrix::DensityMatrix(Matrix entries, Dims dims, NoPositivityCheck)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  check_dims(dims_);
  if (entries_.rows() != entries_.cols()) throw ContractViolation("density matrix must be square");
  if (total_dimension(dims_) != entries_.rows()) {
    throw ContractViolation("product of dims does not match matrix size");
  }
  if (!entries_.allFinite()) throw ContractViolation("non-finite matrix entry");
  if (hermitian_defect(entries_) > kValidationTolerance) {
    throw ContractViolation("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace().real() - 1.0) > kValidationTolerance) {
    throw ContractViolation("density matrix trace is not 1");
  }
}

DensityMatrix::DensityMatrix(Matrix entries, Dims dims)
    : DensityMatrix(std::move(entries), std::move(dims), NoPositivityCheck{}) {
  const EigenSystem es = hermitian_eigendecompose(entries_);
  if (es.values(es.values.size() - 1) < -kValidationTolerance) {
    throw ContractViolation("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::trusted(Matrix entries, Dims dims) {
  return DensityMatrix(std::move(entries), std::move(dims), NoPositivityCheck{});
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return trusted(psi.amplitudes() * psi.amplitudes().adjoint(), psi.dims());
}

// ---------------------------------------------------------------------------

EigenSystem hermitian_eigendecompose(const Matrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("eigendecomposition needs a square matrix");
  if (m.size() == 0) return {};
  if (hermitian_defect(m) > kValidationTolerance) {
    throw ContractViolation("eigendecomposition needs a Hermitian matrix");
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ContractViolation("eigensolver failed to converge");
  // Eigen returns ascending order.
  EigenSystem out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

int numerical_rank(const DensityMatrix& rho, double threshold) {
  const EigenSystem es = hermitian_eigendecompose(rho.matrix());
  return static_cast<int>((es.values.array() > threshold).count());
}

Matrix partial_trace(const Matrix& rho, const Dims& dims, const Subsystems& keep) {
  if (rho.rows() != rho.cols() || rho.rows() != total_dimension(dims)) {
    throw ContractViolation("partial trace: matrix size does not match dims");
  }
  const Eigen::MatrixXi table = subsystem_index_table(dims, keep);
  const Eigen::Index dk = table.rows();
  const Eigen::Index dt = table.cols();
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) acc += rho(table(a, t), table(b, t));
      out(a, b) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Subsystems& keep) {
  return DensityMatrix::trusted(partial_trace(rho.matrix(), rho.dims(), keep),
                                select_dims(rho.dims(), keep));
}

Matrix reduced_matrix(const Vector& amplitudes, const Dims& dims, const Subsystems& keep) {
  const Matrix psi = reshape_amplitudes(amplitudes, dims, keep);
  return psi * psi.adjoint();
}

DensityMatrix reduced_state(const PureState& psi, const Subsystems& keep) {
  return DensityMatrix::trusted(reduced_matrix(psi.amplitudes(), psi.dims(), keep),
                                select_dims(psi.dims(), keep));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  Vector out(a.dimension() * b.dimension());
  for (Eigen::Index i = 0; i < a.dimension(); ++i) {
    out.segment(i * b.dimension(), b.dimension()) = a[i] * b.amplitudes();
  }
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState::normalized(std::move(out), std::move(dims));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  const Eigen::Index da = a.dimension();
  const Eigen::Index db = b.dimension();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
  }
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::trusted(std::move(out), std::move(dims));
}

Matrix matrix_sqrt_psd(const Matrix& m) {
  const EigenSystem es = hermitian_eigendecompose(m);
  if (es.values.size() == 0) return m;
  if (es.values(es.values.size() - 1) < -1e-8) {
    throw ContractViolation("matrix square root of a matrix with a negative eigenvalue");
  }
  const RealVector roots = es.values.cwiseMax(0.0).cwiseSqrt();
  return es.vectors * roots.asDiagonal() * es.vectors.adjoint();
}

PureState purify(const DensityMatrix& rho) {
  const EigenSystem es = hermitian_eigendecompose(rho.matrix());
  const int rank = std::max(1, static_cast<int>((es.values.array() > kEigenClamp).count()));
  const Eigen::Index d = rho.dimension();
  Vector psi(d * rank);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (int k = 0; k < rank; ++k) {
      psi(i * rank + k) = std::sqrt(std::max(es.values(k), 0.0)) * es.vectors(i, k);
    }
  }
  Dims dims = rho.dims();
  dims.push_back(rank);
  return PureState::normalized(std::move(psi), std::move(dims));
}

SchmidtResult schmidt_decompose(const PureState& psi, const Subsystems& side) {
  const Subsystems sorted = checked_sorted(side, psi.num_subsystems());
  if (static_cast<int>(sorted.size()) == psi.num_subsystems()) {
    throw ContractViolation("bipartition needs a non-empty complement");
  }
  const Matrix m = reshape_amplitudes(psi.amplitudes(), psi.dims(), sorted);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  // psi = sum_k s_k u_k conj(v_k)^T, so the right Schmidt vectors are conj(v_k).
  return {svd.singularValues(), svd.matrixU(), svd.matrixV().conjugate()};
}

}  // namespace monogamy
