#pragma once

#include <Eigen/Dense>
#include <functional>

namespace specreg {

struct SimplexOptions {
  int max_evals = 500;
  // Stop once the simplex value spread drops below tol * (|best| + tiny).
  double tol = 1e-8;
  double initial_step = 0.3;
};

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

// Nelder-Mead downhill simplex. The objective may return +inf to mark
// infeasible points; the initial point must be feasible.
SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, const SimplexOptions& opt);

}  // namespace specreg
