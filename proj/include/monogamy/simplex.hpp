#pragma once

#include <Eigen/Dense>

namespace monogamy {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::iteration_limit;
  Eigen::VectorXd x;  // primal solution, size n
  double value = 0.0;
};

// min c^T x  subject to  A x = b, x >= 0.
// Dense two-phase tableau simplex: Dantzig pricing with a switch to Bland's
// rule after a run of degenerate pivots. Sized for a few dozen rows.
LpResult solve_standard_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c, int max_pivots = 0);

}  // namespace monogamy
