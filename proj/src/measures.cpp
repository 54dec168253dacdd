#include "monogamy/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "monogamy/error.hpp"

namespace monogamy {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLn2Sq = kLn2 * kLn2;
constexpr double kUnitSlack = 1e-12;

double clamp_unit(double x, const char* what) {
  if (!(x >= -kUnitSlack && x <= 1.0 + kUnitSlack)) {
    throw ContractViolation(std::string(what) + ": argument outside [0, 1]");
  }
  return std::clamp(x, 0.0, 1.0);
}

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) throw ContractViolation(std::string(what) + ": argument outside (0, 1)");
}

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// artanh(sqrt(1 - x)) written as ln((1 + sqrt(1-x)) / sqrt(x)), which stays
// accurate at both ends of (0, 1].
double artanh_sqrt_one_minus(double x) {
  return std::log1p(std::sqrt(1.0 - x)) - 0.5 * std::log(x);
}

// Two-qubit spin flip Y (x) Y = antidiag(-1, 1, 1, -1).
Eigen::Matrix4cd spin_flip() {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

double wootters_combination(RealVector roots) {
  std::sort(roots.data(), roots.data() + roots.size(), std::greater<>());
  double c = roots.size() > 0 ? roots(0) : 0.0;
  for (Eigen::Index i = 1; i < roots.size(); ++i) c -= roots(i);
  return std::clamp(c, 0.0, 1.0);
}

double entropy_2x2(const Matrix& rho) {
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
  const double mid = 0.5 * (a + d);
  RealVector ev(2);
  ev << mid + half_gap, mid - half_gap;
  return entropy_of_spectrum(ev);
}

}  // namespace

double binary_entropy(double x) {
  const double p = clamp_unit(x, "binary_entropy");
  return plogp(p) + plogp(1.0 - p);
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) > kEigenClamp) s += plogp(eigenvalues(i));
  }
  return s;
}

double von_neumann_entropy(const Matrix& rho) {
  if (rho.rows() == 2 && rho.cols() == 2) return entropy_2x2(rho);
  return entropy_of_spectrum(hermitian_eigendecompose(rho).values);
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

double concurrence_two_qubit(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw ContractViolation("concurrence_two_qubit needs a 4x4 density matrix");
  }
  const EigenSystem es = hermitian_eigendecompose(rho);
  if (es.values(3) < -1e-8) throw ContractViolation("concurrence of a matrix with a negative eigenvalue");
  // Singular values of V^T (Y x Y) V with V = E sqrt(L) are the Wootters mu_i.
  return concurrence_from_ensemble(es.vectors * es.values.cwiseMax(0.0).cwiseSqrt().asDiagonal());
}

double concurrence_two_qubit(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw ContractViolation("concurrence_two_qubit needs dims {2, 2}");
  return concurrence_two_qubit(rho.matrix());
}

double concurrence_from_ensemble(const Matrix& vectors) {
  if (vectors.rows() != 4) throw ContractViolation("ensemble vectors must have 4 components");
  Matrix tau;
  if (vectors.cols() > 4) {
    // V^dagger = Q R gives tau = conj(Q) [conj(R) Y R^dagger] Q^dagger with the
    // same singular values as the 4 x 4 core.
    const Eigen::HouseholderQR<Matrix> qr(vectors.adjoint());
    const Matrix r = qr.matrixQR().topRows(4).triangularView<Eigen::Upper>();
    tau = r.conjugate() * spin_flip() * r.adjoint();
  } else {
    tau = vectors.transpose() * spin_flip() * vectors;
  }
  Eigen::JacobiSVD<Matrix> svd(tau);
  return wootters_combination(svd.singularValues());
}

double concurrence_pure_bipartite(const PureState& psi, const Subsystems& side) {
  if (static_cast<int>(side.size()) >= psi.num_subsystems()) {
    throw ContractViolation("bipartition needs a non-empty complement");
  }
  const Matrix rho = reduced_matrix(psi.amplitudes(), psi.dims(), side);
  const double purity = rho.cwiseAbs2().sum();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double eof_from_concurrence(double c) {
  const double cc = clamp_unit(c, "eof_from_concurrence");
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - cc * cc))));
}

double eof_two_qubit(const Matrix& rho) { return eof_from_concurrence(concurrence_two_qubit(rho)); }
double eof_two_qubit(const DensityMatrix& rho) {
  return eof_from_concurrence(concurrence_two_qubit(rho));
}

double eof_pure_bipartite(const PureState& psi, const Subsystems& side) {
  if (static_cast<int>(side.size()) >= psi.num_subsystems()) {
    throw ContractViolation("bipartition needs a non-empty complement");
  }
  return von_neumann_entropy(reduced_matrix(psi.amplitudes(), psi.dims(), side));
}

// ---------------------------------------------------------------------------

double sef(double x) {
  const double xx = clamp_unit(x, "sef");
  const double e = binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - xx)));
  return e * e;
}

double sef_d1(double x) {
  require_open_unit(x, "sef_d1");
  const double y = std::sqrt(1.0 - x);
  const double t1 = -1.0 / (2.0 * y * kLn2Sq);
  const double t2 = artanh_sqrt_one_minus(x);
  // 2 y T + ln(x/4), rewritten so the ln x terms cancel analytically.
  const double t3 = -2.0 * x * t2 / (1.0 + y) + 2.0 * std::log1p(-x / (2.0 * (1.0 + y)));
  return t1 * t2 * t3;
}

double m_function(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw ContractViolation("m_function: argument outside (0, 1]");
  // y lq - T (2x - 2 + x lq) with y - 1 + x = x y / (1 + y) and
  // 2T = -lq + 2 ln((1 + y) / 2) substituted; the O(ln x) terms cancel exactly.
  const double y = std::sqrt(1.0 - x);
  const double lq = std::log(x / 4.0);
  const double half_log = std::log1p(-x / (2.0 * (1.0 + y)));
  return x * y * lq / (1.0 + y) + 2.0 * (1.0 - x) * half_log - artanh_sqrt_one_minus(x) * x * lq;
}

double sef_d2_limit_at_one() { return (3.0 - std::log(4.0)) / (6.0 * kLn2Sq); }

double sef_d2(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw ContractViolation("sef_d2: argument outside (0, 1]");
  const double u = 1.0 - x;
  if (u < 1e-4) {
    // g*M is 0/0 at x = 1; expand in u = 1 - x instead.
    const double c1 = (5.0 - 4.0 * kLn2) / (10.0 * kLn2Sq);
    const double c2 = (203.0 - 180.0 * kLn2) / (420.0 * kLn2Sq);
    return sef_d2_limit_at_one() + u * (c1 + u * c2);
  }
  const double g = 1.0 / (4.0 * std::pow(u, 1.5) * x * kLn2Sq);
  return g * m_function(x);
}

double m_function_argmax() { return 4.0 * std::exp(-3.0); }

// ---------------------------------------------------------------------------

Matrix pair_reduced(const PureState& psi, int a, int b) {
  if (a == b) throw ContractViolation("pair_reduced needs two distinct subsystems");
  return reduced_matrix(psi.amplitudes(), psi.dims(), {a, b});
}

Matrix pair_ensemble(const PureState& psi, int a, int b) {
  if (a == b) throw ContractViolation("pair_ensemble needs two distinct subsystems");
  const Eigen::MatrixXi table = subsystem_index_table(psi.dims(), {a, b});
  if (table.rows() != 4) throw ContractViolation("pair_ensemble needs two qubits");
  Matrix v(4, table.cols());
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index t = 0; t < table.cols(); ++t) v(i, t) = psi[table(i, t)];
  }
  return v;
}

double pair_concurrence(const PureState& psi, int a, int b) {
  return concurrence_from_ensemble(pair_ensemble(psi, a, b));
}

double pair_eof(const PureState& psi, int a, int b) {
  return eof_from_concurrence(std::min(1.0, pair_concurrence(psi, a, b)));
}

double ckw_residual_pure(const PureState& psi, int focus) {
  const int n = psi.num_subsystems();
  if (n < 2 || psi.dims() != Dims(n, 2)) throw ContractViolation("ckw residual needs qubits");
  if (focus < 0 || focus >= n) throw ContractViolation("focus qubit out of range");
  const double c_all = concurrence_pure_bipartite(psi, {focus});
  double residual = c_all * c_all;
  for (int j = 0; j < n; ++j) {
    if (j == focus) continue;
    const double c = pair_concurrence(psi, focus, j);
    residual -= c * c;
  }
  return residual;
}

double three_tangle_pure(const PureState& psi) {
  if (psi.dims() != Dims{2, 2, 2}) throw ContractViolation("three_tangle_pure needs three qubits");
  return std::clamp(ckw_residual_pure(psi, 0), 0.0, 1.0);
}

Complex cayley_hyperdeterminant(const PureState& psi) {
  if (psi.dims() != Dims{2, 2, 2}) throw ContractViolation("hyperdeterminant needs three qubits");
  auto a = [&](int i, int j, int k) { return psi[i * 4 + j * 2 + k]; };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return d1 - 2.0 * d2 + 4.0 * d3;
}

}  // namespace monogamy
