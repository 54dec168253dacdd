#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace oracle {

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a(2 * n, 2 * n);
  a << m.real(), -m.imag(), m.imag(), m.real();
  const Eigen::Index size = 2 * n;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < size; ++p) {
      for (Eigen::Index q = p + 1; q < size; ++q) off += a(p, q) * a(p, q);
    }
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < size; ++p) {
      for (Eigen::Index q = p + 1; q < size; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < size; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < size; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> all(size);
  for (Eigen::Index i = 0; i < size; ++i) all[i] = a(i, i);
  std::sort(all.begin(), all.end(), std::greater<>());
  // Each eigenvalue appears twice in the embedding.
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = 0.5 * (all[2 * i] + all[2 * i + 1]);
  return out;
}

namespace {

std::vector<int> digits(long index, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    d[k] = static_cast<int>(index % dims[k]);
    index /= dims[k];
  }
  return d;
}

}  // namespace

CMatrix partial_trace(const CMatrix& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
  long kept_dim = 1;
  for (int k : keep) kept_dim *= dims[k];
  CMatrix out = CMatrix::Zero(kept_dim, kept_dim);
  const long total = rho.rows();
  for (long i = 0; i < total; ++i) {
    const auto di = digits(i, dims);
    for (long j = 0; j < total; ++j) {
      const auto dj = digits(j, dims);
      bool traced_equal = true;
      for (std::size_t k = 0; k < dims.size() && traced_equal; ++k) {
        if (std::find(keep.begin(), keep.end(), static_cast<int>(k)) == keep.end() && di[k] != dj[k]) {
          traced_equal = false;
        }
      }
      if (!traced_equal) continue;
      long a = 0, b = 0;
      for (int k : keep) {
        a = a * dims[k] + di[k];
        b = b * dims[k] + dj[k];
      }
      out(a, b) += rho(i, j);
    }
  }
  return out;
}

double concurrence(const CMatrix& rho) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const CMatrix tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<CMatrix> solver(rho * tilde);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < 4; ++i) roots.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i).real())));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double binary_entropy(double x) {
  double h = 0.0;
  for (double v : {x, 1.0 - x}) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double entropy_bits(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double v = eigenvalues(i);
    if (v > 1e-14) s -= v * std::log2(v);
  }
  return s;
}

double sef(double x) {
  const double h = binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - x))));
  return h * h;
}

double three_tangle(const CVector& a) {
  auto at = [&](int i, int j, int k) { return a(4 * i + 2 * j + k); };
  const Complex d1 = at(0, 0, 0) * at(0, 0, 0) * at(1, 1, 1) * at(1, 1, 1) +
                     at(0, 0, 1) * at(0, 0, 1) * at(1, 1, 0) * at(1, 1, 0) +
                     at(0, 1, 0) * at(0, 1, 0) * at(1, 0, 1) * at(1, 0, 1) +
                     at(1, 0, 0) * at(1, 0, 0) * at(0, 1, 1) * at(0, 1, 1);
  const Complex d2 = at(0, 0, 0) * at(1, 1, 1) * at(0, 1, 1) * at(1, 0, 0) +
                     at(0, 0, 0) * at(1, 1, 1) * at(1, 0, 1) * at(0, 1, 0) +
                     at(0, 0, 0) * at(1, 1, 1) * at(1, 1, 0) * at(0, 0, 1) +
                     at(0, 1, 1) * at(1, 0, 0) * at(1, 0, 1) * at(0, 1, 0) +
                     at(0, 1, 1) * at(1, 0, 0) * at(1, 1, 0) * at(0, 0, 1) +
                     at(1, 0, 1) * at(0, 1, 0) * at(1, 1, 0) * at(0, 0, 1);
  const Complex d3 = at(0, 0, 0) * at(1, 1, 0) * at(1, 0, 1) * at(0, 1, 1) +
                     at(1, 1, 1) * at(0, 0, 1) * at(0, 1, 0) * at(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double pure_focus_entropy(const CVector& psi, int qubits, int focus) {
  const std::vector<int> dims(qubits, 2);
  const CMatrix rho = psi * psi.adjoint();
  return entropy_bits(hermitian_eigenvalues(partial_trace(rho, dims, {focus})));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace oracle
