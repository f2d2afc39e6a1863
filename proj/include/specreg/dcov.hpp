#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

namespace specreg {

// The three pairwise-distance sums behind the sample distance covariance,
// plus the two marginal factors of s_n2 and the combined statistic
// vn2 = s_n1 + s_n2 - 2 s_n3.
struct DcovParts {
  double s_n1 = 0.0;
  double s_n2 = 0.0;
  double s_n3 = 0.0;
  double s_n21 = 0.0;  // mean pairwise |v_j - v_k|
  double s_n22 = 0.0;  // mean pairwise |z_j - z_k|
  double vn2 = 0.0;
};

// O(n^2) evaluation: s_n3 comes from row sums of the two distance matrices
// rather than the definitional triple loop.
DcovParts dcov_parts(const Eigen::VectorXd& v, const Eigen::VectorXd& z);

// Scale-free screening statistic sqrt(n) * vn2 / s_n2. Returns 0 when either
// variable is constant (s_n2 = 0), marking it unselectable.
double dc_stat(const Eigen::VectorXd& v, const Eigen::VectorXd& z);

struct ScreenStat {
  std::size_t index = 0;  // column index into the screened matrix
  double t_hat = 0.0;
};

struct ScreenRule {
  enum class Kind { top_k, threshold } kind = Kind::top_k;
  std::size_t p_tilde = 0;     // top_k only
  double c = 0.0;              // threshold only
  double threshold = 0.0;      // realized cutoff c * (log n)^{3/4}
};

struct ScreenReport {
  std::vector<ScreenStat> stats;      // sorted descending by t_hat, ties by index
  std::vector<std::size_t> selected;  // ascending column indices
  ScreenRule rule;
  std::size_t n = 0;

  bool contains(std::size_t index) const;
};

// Keeps the p_tilde columns of Z with the largest statistics; ties go to the
// lower column index.
ScreenReport screen_topk(const Eigen::VectorXd& v, const Eigen::MatrixXd& Z,
                         std::size_t p_tilde);

// Keeps every column whose statistic reaches c * (log n)^{3/4}. Requires
// n >= 3 and c > 0.
ScreenReport screen_threshold(const Eigen::VectorXd& v, const Eigen::MatrixXd& Z,
                              double c);

// True positive rate and false discovery rate of `selected` against `truth`,
// both subsets of [0, p_n). TPR is 1 for empty truth; FDR uses the
// |selected| + 1 denominator.
std::pair<double, double> tpr_fdr(const std::vector<std::size_t>& selected,
                                  const std::vector<std::size_t>& truth,
                                  std::size_t p_n);

}  // namespace specreg
