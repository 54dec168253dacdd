#include "monogamy/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "monogamy/error.hpp"
#include "monogamy/indicators.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/simplex.hpp"
#include "monogamy/states.hpp"

namespace monogamy {
namespace {

constexpr double kNegligibleWeight = 1e-15;
constexpr double kIsometryTolerance = 1e-9;

struct Spectrum {
  RealVector values;  // top-r eigenvalues
  Matrix vectors;     // d x r
};

Spectrum support(const DensityMatrix& rho) {
  const EigenSystem es = hermitian_eigendecompose(rho.matrix());
  const int rank = std::max(1, static_cast<int>((es.values.array() > kEigenClamp).count()));
  return {es.values.head(rank).cwiseMax(0.0), es.vectors.leftCols(rank)};
}

// Member i of the ensemble is column i of E diag(sqrt l) W^T.
Matrix ensemble_vectors(const Spectrum& s, const Matrix& isometry) {
  return s.vectors * s.values.cwiseSqrt().asDiagonal() * isometry.transpose();
}

Decomposition to_decomposition(const Matrix& vectors, const Dims& dims) {
  Decomposition out;
  for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
    const double w = vectors.col(i).squaredNorm();
    if (w < kNegligibleWeight) continue;
    out.probabilities.push_back(w);
    out.components.push_back(PureState::normalized(vectors.col(i), dims));
  }
  return out;
}

class EnsembleCost {
 public:
  EnsembleCost(const PureFunctional& f, const Dims& dims) : f_(f), dims_(dims) {}

  double operator()(const Vector& v) const {
    const double w = v.squaredNorm();
    if (w < kNegligibleWeight) return 0.0;
    return w * f_(PureState(v / std::sqrt(w), dims_));
  }

 private:
  const PureFunctional& f_;
  const Dims& dims_;
};

struct RestartOutcome {
  double value = std::numeric_limits<double>::infinity();
  Matrix vectors;
  bool converged = false;
};

class PairOptimizer {
 public:
  PairOptimizer(const EnsembleCost& cost, Matrix& v, std::vector<double>& c)
      : cost_(cost), v_(v), c_(c) {}

  // Returns the cost decrease achieved on pair (i, j).
  double improve(int i, int j, bool coarse_scan) {
    const double base = c_[i] + c_[j];
    double best_t = 0.0;
    double best_p = 0.0;
    double best = base;
    double best_ci = c_[i];
    double best_cj = c_[j];

    auto trial = [&](double t, double p) {
      double ci = 0.0;
      double cj = 0.0;
      const double val = evaluate(i, j, t, p, ci, cj);
      if (val < best) {
        best = val;
        best_t = t;
        best_p = p;
        best_ci = ci;
        best_cj = cj;
        return true;
      }
      return false;
    };

    constexpr double pi = std::numbers::pi;
    if (coarse_scan) {
      for (double t : {-3 * pi / 8, -pi / 4, -pi / 8, pi / 8, pi / 4, 3 * pi / 8}) {
        for (double p : {0.0, pi / 2}) trial(t, p);
      }
    }
    // Compass search in (t, phi).
    double step = coarse_scan ? pi / 16 : 0.05;
    for (int moves = 0; step > 1e-6 && moves < 400; ++moves) {
      const double t0 = best_t;
      const double p0 = best_p;
      const bool moved = trial(t0 + step, p0) || trial(t0 - step, p0) ||
                         trial(t0, p0 + step) || trial(t0, p0 - step);
      if (!moved) step *= 0.5;
    }

    if (best < base) {
      const Vector vi = v_.col(i);
      const Vector vj = v_.col(j);
      const Complex e = std::polar(1.0, best_p);
      v_.col(i) = std::cos(best_t) * vi - std::conj(e) * std::sin(best_t) * vj;
      v_.col(j) = e * std::sin(best_t) * vi + std::cos(best_t) * vj;
      c_[i] = best_ci;
      c_[j] = best_cj;
      return base - best;
    }
    return 0.0;
  }

 private:
  double evaluate(int i, int j, double t, double p, double& ci, double& cj) {
    const Complex e = std::polar(1.0, p);
    const double ct = std::cos(t);
    const double st = std::sin(t);
    scratch_i_ = ct * v_.col(i) - std::conj(e) * st * v_.col(j);
    scratch_j_ = e * st * v_.col(i) + ct * v_.col(j);
    ci = cost_(scratch_i_);
    cj = cost_(scratch_j_);
    return ci + cj;
  }

  const EnsembleCost& cost_;
  Matrix& v_;
  std::vector<double>& c_;
  Vector scratch_i_;
  Vector scratch_j_;
};

RestartOutcome polish(Matrix v, const EnsembleCost& cost, const RoofConfig& config) {
  const int m = static_cast<int>(v.cols());
  std::vector<double> c(m);
  for (int i = 0; i < m; ++i) c[i] = cost(v.col(i));

  RestartOutcome out;
  PairOptimizer pairs(cost, v, c);
  for (int sweep = 0; sweep < config.max_iterations; ++sweep) {
    double gain = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) gain += pairs.improve(i, j, sweep < 2);
    }
    if (gain < config.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = 0.0;
  for (double ci : c) out.value += ci;
  out.vectors = std::move(v);
  return out;
}

// Row layout: |c_i|^2 for each i, then Re and Im of c_i conj(c_j) for i < j.
Eigen::VectorXd moment_column(const Vector& c) {
  const Eigen::Index r = c.size();
  Eigen::VectorXd col(r * r);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < r; ++i) col(k++) = std::norm(c(i));
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) {
      const Complex z = c(i) * std::conj(c(j));
      col(k++) = z.real();
      col(k++) = z.imag();
    }
  }
  return col;
}

Vector random_unit(int r, Rng& rng) {
  Vector c(r);
  for (int i = 0; i < r; ++i) c(i) = rng.complex_normal();
  return c / c.norm();
}

struct Candidates {
  std::vector<Vector> coords;  // unit vectors in the eigenbasis of the support
  std::vector<double> costs;
};

void append_costs(Candidates& pool, const Spectrum& s, const PureFunctional& f, const Dims& dims,
                  std::size_t from, Execution execution) {
  pool.costs.resize(pool.coords.size());
  for_each_index(execution, static_cast<std::ptrdiff_t>(pool.coords.size() - from),
                 [&](std::ptrdiff_t k) {
                   const std::size_t idx = from + static_cast<std::size_t>(k);
                   pool.costs[idx] = f(PureState::normalized(s.vectors * pool.coords[idx], dims));
                 });
}

// Returns the indices and weights of the LP optimum over the pool; empty on failure.
std::vector<std::pair<std::size_t, double>> solve_pool(const Candidates& pool, const Spectrum& s) {
  const int r = static_cast<int>(s.values.size());
  const Eigen::Index n = static_cast<Eigen::Index>(pool.coords.size());
  Eigen::MatrixXd a(r * r, n);
  Eigen::VectorXd cost(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    a.col(k) = moment_column(pool.coords[k]);
    cost(k) = pool.costs[k];
  }
  Eigen::VectorXd b = Eigen::VectorXd::Zero(r * r);
  b.head(r) = s.values / s.values.sum();

  const LpResult lp = solve_standard_lp(a, b, cost);
  std::vector<std::pair<std::size_t, double>> support;
  if (lp.status != LpStatus::optimal) return support;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (lp.x(k) > kNegligibleWeight) support.emplace_back(static_cast<std::size_t>(k), lp.x(k));
  }
  return support;
}

// Global start: LP over sampled support states, refined by zooming in on the
// optimal support. Returns ensemble vectors that reassemble rho exactly, or an
// empty matrix if the LP failed.
Matrix lp_start(const Spectrum& s, const PureFunctional& f, const Dims& dims, std::uint64_t stream,
                const RoofConfig& config) {
  const int r = static_cast<int>(s.values.size());
  Rng rng(stream);
  Candidates pool;
  for (int i = 0; i < r; ++i) pool.coords.push_back(Vector::Unit(r, i));
  const int pool_size = config.pool_size > 0 ? config.pool_size : 500 * r * r;
  for (int k = 0; k < pool_size; ++k) pool.coords.push_back(random_unit(r, rng));
  append_costs(pool, s, f, dims, 0, config.execution);

  auto support = solve_pool(pool, s);
  if (support.empty()) return {};

  auto support_value = [](const Candidates& c, const auto& sup) {
    double v = 0.0;
    for (const auto& [idx, w] : sup) v += w * c.costs[idx];
    return v;
  };
  double value = support_value(pool, support);
  // Keep the spread while rounds pay off, halve it when they stall.
  double spread = 0.3;
  for (int round = 0; round < config.zoom_rounds && spread > 1e-5; ++round) {
    Candidates next;
    for (const auto& [idx, w] : support) {
      next.coords.push_back(pool.coords[idx]);
      next.costs.push_back(pool.costs[idx]);
    }
    const std::size_t kept = next.coords.size();
    for (std::size_t k = 0; k < kept; ++k) {
      for (int t = 0; t < 24; ++t) {
        Vector c = next.coords[k];
        for (int i = 0; i < r; ++i) c(i) += spread * rng.complex_normal();
        next.coords.push_back(c / c.norm());
      }
    }
    append_costs(next, s, f, dims, kept, config.execution);
    auto refined = solve_pool(next, s);
    if (refined.empty()) break;
    const double refined_value = support_value(next, refined);
    if (value - refined_value < config.tolerance) spread *= 0.5;
    if (refined_value < value) {
      value = refined_value;
      pool = std::move(next);
      support = std::move(refined);
    }
  }

  // Rows of Y = L^{-1/2} C diag(sqrt w) are orthonormal up to LP rounding;
  // restoring that exactly makes E sqrt(L) Y an exact decomposition.
  const Eigen::Index m = static_cast<Eigen::Index>(support.size());
  Matrix y(r, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& [idx, w] = support[static_cast<std::size_t>(k)];
    y.col(k) = pool.coords[idx] * std::sqrt(w);
  }
  const RealVector scale = (s.values / s.values.sum()).cwiseSqrt().cwiseInverse();
  y = scale.asDiagonal() * y;
  const EigenSystem gram = hermitian_eigendecompose(y * y.adjoint());
  if (gram.values.minCoeff() <= 0.0) return {};
  const Matrix inv_sqrt =
      gram.vectors * gram.values.cwiseSqrt().cwiseInverse().asDiagonal() * gram.vectors.adjoint();
  y = inv_sqrt * y;
  return s.vectors * s.values.cwiseSqrt().asDiagonal() * y;
}

RestartOutcome run_restart(const Spectrum& s, const PureFunctional& f, const EnsembleCost& cost,
                           const Dims& dims, int m, int restart, const RoofConfig& config) {
  const std::uint64_t stream = derive_seed(config.seed, static_cast<std::uint64_t>(restart));
  Matrix start = lp_start(s, f, dims, stream, config);
  if (start.size() == 0) {
    Rng rng(stream);
    start = ensemble_vectors(s, random_isometry(m, static_cast<int>(s.values.size()), rng));
  }
  return polish(std::move(start), cost, config);
}

}  // namespace

Matrix Decomposition::mixture() const {
  if (components.empty()) return {};
  const Eigen::Index d = components.front().dimension();
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Vector& a = components[i].amplitudes();
    out.noalias() += probabilities[i] * a * a.adjoint();
  }
  return out;
}

double Decomposition::average(const std::function<double(const PureState&)>& f) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i) acc += probabilities[i] * f(components[i]);
  return acc;
}

Decomposition decomposition_from_isometry(const DensityMatrix& rho, const Matrix& isometry) {
  const Spectrum s = support(rho);
  const Eigen::Index r = s.values.size();
  if (isometry.cols() != r || isometry.rows() < r) {
    throw ContractViolation("isometry shape must be m x rank(rho) with m >= rank");
  }
  const Matrix gram = isometry.adjoint() * isometry;
  if ((gram - Matrix::Identity(r, r)).cwiseAbs().maxCoeff() > kIsometryTolerance) {
    throw ContractViolation("matrix is not an isometry (W^dagger W != I)");
  }
  return to_decomposition(ensemble_vectors(s, isometry), rho.dims());
}

RoofResult minimize_roof(const DensityMatrix& rho, const PureFunctional& cost,
                         const RoofConfig& config) {
  if (config.restarts < 1) throw ContractViolation("roof optimizer needs at least one restart");
  const Spectrum s = support(rho);
  const int r = static_cast<int>(s.values.size());

  if (r == 1) {
    RoofResult out;
    out.decomposition = to_decomposition(s.vectors * std::sqrt(s.values(0)), rho.dims());
    out.value = cost(out.decomposition.components.front());
    return out;
  }

  const int m = config.ensemble_size > 0 ? config.ensemble_size : std::max(r, std::min(r * r, 8));
  if (m < r) throw ContractViolation("ensemble size must be at least rank(rho)");

  const EnsembleCost ensemble_cost(cost, rho.dims());
  std::vector<RestartOutcome> outcomes(config.restarts);
  for_each_index(config.execution, config.restarts, [&](std::ptrdiff_t k) {
    outcomes[k] = run_restart(s, cost, ensemble_cost, rho.dims(), m, static_cast<int>(k), config);
  });

  // Lowest value wins; ties keep the earliest restart.
  int best = 0;
  for (int k = 1; k < config.restarts; ++k) {
    if (outcomes[k].value < outcomes[best].value) best = k;
  }
  RoofResult out;
  out.value = outcomes[best].value;
  out.decomposition = to_decomposition(outcomes[best].vectors, rho.dims());
  out.converged = outcomes[best].converged;
  out.best_restart = best;
  return out;
}

double eof_mixed(const DensityMatrix& rho, const Subsystems& side, const RoofConfig& config) {
  return minimize_roof(rho, [&](const PureState& psi) { return eof_pure_bipartite(psi, side); },
                       config)
      .value;
}

RoofResult tau1_mixed_detailed(const DensityMatrix& rho, int focus, const RoofConfig& config) {
  return minimize_roof(rho, [focus](const PureState& psi) { return tau1_pure(psi, focus); },
                       config);
}

double tau1_mixed(const DensityMatrix& rho, int focus, const RoofConfig& config) {
  return tau1_mixed_detailed(rho, focus, config).value;
}

double tau1_global(const DensityMatrix& rho, const RoofConfig& config) {
  const int n = rho.num_subsystems();
  return minimize_roof(
             rho,
             [n](const PureState& psi) {
               double acc = 0.0;
               for (int focus = 0; focus < n; ++focus) acc += tau1_pure(psi, focus);
               return acc / n;
             },
             config)
      .value;
}

double three_tangle_mixed(const DensityMatrix& rho, const RoofConfig& config) {
  if (rho.dims() != Dims{2, 2, 2}) throw ContractViolation("three_tangle_mixed needs three qubits");
  return minimize_roof(rho, [](const PureState& psi) { return three_tangle_pure(psi); }, config)
      .value;
}

double find_p0() {
  // The tangle itself touches zero without changing sign; the hyperdeterminant
  // of the real-amplitude family does change sign, so bisect on it.
  auto signed_det = [](double p) { return cayley_hyperdeterminant(psi_j_p(0, p)).real(); };
  double lo = 0.5;
  double hi = 0.7;
  double f_lo = signed_det(lo);
  if (f_lo * signed_det(hi) > 0.0) throw ContractViolation("find_p0: no sign change on [0.5, 0.7]");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = signed_det(mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace monogamy
