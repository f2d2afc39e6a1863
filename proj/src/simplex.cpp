#include "specreg/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace specreg {

SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, const SimplexOptions& opt) {
  const int d = static_cast<int>(x0.size());
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

  std::vector<Eigen::VectorXd> pts(d + 1, x0);
  std::vector<double> vals(d + 1);
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  vals[0] = eval(pts[0]);
  for (int i = 0; i < d; ++i) {
    pts[i + 1](i) += opt.initial_step;
    vals[i + 1] = eval(pts[i + 1]);
  }

  std::vector<int> order(d + 1);
  SimplexResult res;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0], worst = order[d], second_worst = order[d - 1];

    const double spread = vals[worst] - vals[best];
    if (std::isfinite(vals[best]) && std::isfinite(vals[worst]) &&
        spread <= opt.tol * (std::abs(vals[best]) + 1e-12)) {
      res.converged = true;
      break;
    }
    if (evals >= opt.max_evals) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (int i = 0; i <= d; ++i) {
      if (i != worst) centroid += pts[i];
    }
    centroid /= static_cast<double>(d);

    const Eigen::VectorXd xr = centroid + alpha * (centroid - pts[worst]);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      const bool outside = fr < vals[worst];
      const Eigen::VectorXd xc =
          outside ? centroid + rho * (xr - centroid) : centroid - rho * (centroid - pts[worst]);
      const double fc = eval(xc);
      if (fc < std::min(fr, vals[worst])) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        // Shrink toward the best vertex.
        for (int i = 0; i <= d; ++i) {
          if (i == best) continue;
          pts[i] = pts[best] + sigma * (pts[i] - pts[best]);
          vals[i] = eval(pts[i]);
        }
      }
    }
  }

  const auto it = std::min_element(vals.begin(), vals.end());
  res.x = pts[static_cast<std::size_t>(it - vals.begin())];
  res.value = *it;
  res.evals = evals;
  return res;
}

}  // namespace specreg
