#include "monogamy/states.hpp"

#include <cmath>
#include <numbers>

#include "monogamy/error.hpp"

namespace monogamy {
namespace {

Dims qubits(int n) { return Dims(static_cast<std::size_t>(n), 2); }

void require_qubit_count(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw ContractViolation(std::string(what) + ": qubit count " + std::to_string(n) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ContractViolation(std::string(what) + ": parameter outside [0, 1]");
  }
}

}  // namespace

PureState basis_state(const Dims& dims, long index) {
  Vector v = Vector::Zero(total_dimension(dims));
  if (index < 0 || index >= v.size()) throw ContractViolation("basis index out of range");
  v(index) = 1.0;
  return PureState(std::move(v), dims);
}

PureState bell() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = std::numbers::sqrt2 / 2.0;
  return PureState(std::move(v), qubits(2));
}

PureState ghz3() {
  Vector v = Vector::Zero(8);
  v(0) = v(7) = std::numbers::sqrt2 / 2.0;
  return PureState(std::move(v), qubits(3));
}

PureState w3() { return w_n(3); }

PureState w_n(int n) {
  require_qubit_count(n, 2, 12, "w_n");
  Vector v = Vector::Zero(1L << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) v(1L << k) = amp;
  return PureState(std::move(v), qubits(n));
}

PureState ones_n(int n) {
  require_qubit_count(n, 1, 12, "ones_n");
  return basis_state(qubits(n), (1L << n) - 1);
}

DensityMatrix ghzw_mixture(double p) {
  require_probability(p, "ghzw_mixture");
  const Vector g = ghz3().amplitudes();
  const Vector w = w3().amplitudes();
  return DensityMatrix::trusted(p * g * g.adjoint() + (1.0 - p) * w * w.adjoint(), qubits(3));
}

PureState psi_j_p(int j, double p) {
  if (j < 0 || j > 2) throw ContractViolation("psi_j_p: j must be 0, 1 or 2");
  require_probability(p, "psi_j_p");
  const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * j / 3.0);
  Vector v = std::sqrt(p) * ghz3().amplitudes() - phase * std::sqrt(1.0 - p) * w3().amplitudes();
  return PureState::normalized(std::move(v), qubits(3));
}

DensityMatrix wn_ones_mixture(int n) {
  require_qubit_count(n, 3, 12, "wn_ones_mixture");
  const double alpha = 1.0 / (n + 1.0);
  const Vector ones = ones_n(n).amplitudes();
  const Vector w = w_n(n).amplitudes();
  return DensityMatrix::trusted(alpha * ones * ones.adjoint() + (1.0 - alpha) * w * w.adjoint(),
                                qubits(n));
}

PureState acin_standard(const AcinParams& params) {
  const double ls[] = {params.l0, params.l1, params.l2, params.l3, params.l4};
  double sum = 0.0;
  for (double l : ls) {
    if (!(l >= 0.0 && l <= 1.0)) throw ContractViolation("acin_standard: lambda outside [0, 1]");
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > kValidationTolerance) {
    throw ContractViolation("acin_standard: squared lambdas must sum to 1");
  }
  if (!(params.phi >= 0.0 && params.phi <= std::numbers::pi)) {
    throw ContractViolation("acin_standard: phase outside [0, pi]");
  }
  Vector v = Vector::Zero(8);
  v(0b000) = params.l0;
  v(0b100) = std::polar(params.l1, params.phi);
  v(0b101) = params.l2;
  v(0b110) = params.l3;
  v(0b111) = params.l4;
  return PureState(std::move(v), qubits(3));
}

// ---------------------------------------------------------------------------

CavityParams CavityParams::make(double alpha, double kappa_t) {
  require_probability(alpha, "cavity alpha");
  if (!(kappa_t >= 0.0) || !std::isfinite(kappa_t)) {
    throw ContractViolation("cavity kappa*t must be finite and non-negative");
  }
  return CavityParams{alpha, kappa_t};
}

double CavityParams::beta() const { return std::sqrt(std::max(0.0, 1.0 - alpha * alpha)); }
double CavityParams::xi() const { return std::exp(-kappa_t / 2.0); }
double CavityParams::chi() const { return std::sqrt(-std::expm1(-kappa_t)); }

PureState cavity_output(double alpha, double kappa_t) {
  return cavity_output(CavityParams::make(alpha, kappa_t));
}

PureState cavity_output(const CavityParams& params) {
  const CavityParams p = CavityParams::make(params.alpha, params.kappa_t);
  // |phi_t> over (c, r): |10> -> index 2, |01> -> index 1.
  Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
  phi(2) = p.xi();
  phi(1) = p.chi();
  Vector v = Vector::Zero(16);
  v(0) = p.alpha;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      // a = (c1, r1), b = (c2, r2); ordering (c1, r1, c2, r2) keeps a as the high pair.
      v(a * 4 + b) += p.beta() * phi(a) * phi(b);
    }
  }
  return PureState::normalized(std::move(v), qubits(4));
}

// ---------------------------------------------------------------------------

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

PureState haar_random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  Vector v(total_dimension(dims));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  return PureState::normalized(std::move(v), dims);
}

DensityMatrix random_mixed(const Dims& dims, int rank, std::uint64_t seed) {
  const long d = total_dimension(dims);
  if (rank < 1 || rank > d) throw ContractViolation("random_mixed: rank out of range");
  Dims extended = dims;
  extended.push_back(rank);
  const PureState psi = haar_random_pure(extended, seed);
  Subsystems keep(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) keep[k] = static_cast<int>(k);
  return reduced_state(psi, keep);
}

Matrix random_isometry(int rows, int cols, Rng& rng) {
  if (cols < 1 || rows < cols) throw ContractViolation("random_isometry: need rows >= cols >= 1");
  Matrix g(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) g(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  // Fix the phase freedom of QR so the distribution is Haar.
  const Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int c = 0; c < cols; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  return q;
}

}  // namespace monogamy
