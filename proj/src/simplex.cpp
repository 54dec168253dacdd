#include "monogamy/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "monogamy/error.hpp"

namespace monogamy {
namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr int kDegenerateRunBeforeBland = 50;

class Tableau {
 public:
  // Columns: n structural, m artificial, then the right-hand side.
  Tableau(const Eigen::MatrixXd& a, const Eigen::VectorXd& b)
      : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())),
        t_(Eigen::MatrixXd::Zero(m_ + 1, n_ + m_ + 1)), basis_(m_) {
    for (int i = 0; i < m_; ++i) {
      const double sign = b(i) < 0.0 ? -1.0 : 1.0;
      t_.row(i).head(n_) = sign * a.row(i);
      t_(i, n_ + i) = 1.0;
      t_(i, rhs()) = sign * b(i);
      basis_[i] = n_ + i;
    }
  }

  int rhs() const { return n_ + m_; }

  // Loads reduced costs for the given full cost vector (size n + m).
  void load_costs(const Eigen::VectorXd& cost) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_ + m_) = cost.transpose();
    for (int i = 0; i < m_; ++i) t_.row(m_) -= cost(basis_[i]) * t_.row(i);
  }

  // Runs simplex iterations over columns [0, limit). Returns false when unbounded.
  bool optimize(int limit, int max_pivots, bool& hit_limit) {
    int degenerate_run = 0;
    for (int pivots = 0;; ++pivots) {
      if (pivots >= max_pivots) {
        hit_limit = true;
        return true;
      }
      const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
      int enter = -1;
      double most_negative = -kPivotTolerance;
      for (int j = 0; j < limit; ++j) {
        const double d = t_(m_, j);
        if (d < most_negative) {
          enter = j;
          if (bland) break;
          most_negative = d;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double coef = t_(i, enter);
        if (coef <= kPivotTolerance) continue;
        const double ratio = t_(i, rhs()) / coef;
        if (ratio < best_ratio - 1e-15 ||
            (ratio <= best_ratio + 1e-15 && leave >= 0 && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      degenerate_run = best_ratio <= 1e-15 ? degenerate_run + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i != row && t_(i, col) != 0.0) t_.row(i) -= t_(i, col) * t_.row(row);
    }
    basis_[row] = col;
  }

  // Pivots basic artificials out wherever a structural column allows it.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(t_(i, j)) > 1e-9) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  double objective() const { return -t_(m_, rhs()); }

  Eigen::VectorXd solution() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x(basis_[i]) = std::max(0.0, t_(i, rhs()));
    }
    return x;
  }

 private:
  int m_;
  int n_;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_standard_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c, int max_pivots) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (b.size() != m || c.size() != n) throw ContractViolation("LP dimensions do not match");
  if (max_pivots <= 0) max_pivots = 50 * (m + n);

  Tableau tableau(a, b);
  LpResult out;
  bool hit_limit = false;

  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  tableau.load_costs(phase1);
  tableau.optimize(n + m, max_pivots, hit_limit);
  const double scale = 1.0 + b.cwiseAbs().sum();
  if (tableau.objective() > 1e-9 * scale) {
    out.status = hit_limit ? LpStatus::iteration_limit : LpStatus::infeasible;
    return out;
  }
  tableau.expel_artificials();

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
  phase2.head(n) = c;
  tableau.load_costs(phase2);
  const bool bounded = tableau.optimize(n, max_pivots, hit_limit);
  out.x = tableau.solution();
  out.value = c.dot(out.x);
  out.status = !bounded ? LpStatus::unbounded : hit_limit ? LpStatus::iteration_limit : LpStatus::optimal;
  return out;
}

}  // namespace monogamy
