#include "specreg/dcov.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "specreg/errors.hpp"

namespace specreg {

namespace {

void check_pair(const Eigen::VectorXd& v, const Eigen::VectorXd& z) {
  if (v.size() != z.size()) throw DataError("dcov: length mismatch");
  if (v.size() < 2) throw DataError("dcov: need n >= 2");
  if (!v.allFinite() || !z.allFinite()) throw DataError("dcov: non-finite input");
}

ScreenReport screen_common(const Eigen::VectorXd& v, const Eigen::MatrixXd& Z) {
  if (Z.rows() != v.size()) throw DataError("screen: Z rows must match v");
  ScreenReport report;
  report.n = static_cast<std::size_t>(v.size());
  const auto p = static_cast<std::size_t>(Z.cols());
  report.stats.reserve(p);
  for (std::size_t l = 0; l < p; ++l) {
    report.stats.push_back({l, dc_stat(v, Z.col(static_cast<Eigen::Index>(l)))});
  }
  std::sort(report.stats.begin(), report.stats.end(), [](const ScreenStat& a, const ScreenStat& b) {
    if (a.t_hat != b.t_hat) return a.t_hat > b.t_hat;
    return a.index < b.index;
  });
  return report;
}

}  // namespace

DcovParts dcov_parts(const Eigen::VectorXd& v, const Eigen::VectorXd& z) {
  check_pair(v, z);
  const auto n = static_cast<std::size_t>(v.size());
  std::vector<double> row_a(n, 0.0), row_b(n, 0.0);
  double sum_ab = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double a = std::abs(v[static_cast<Eigen::Index>(j)] - v[static_cast<Eigen::Index>(k)]);
      const double b = std::abs(z[static_cast<Eigen::Index>(j)] - z[static_cast<Eigen::Index>(k)]);
      sum_ab += a * b;
      sum_a += a;
      sum_b += b;
      row_a[j] += a;
      row_a[k] += a;
      row_b[j] += b;
      row_b[k] += b;
    }
  }
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  DcovParts parts;
  parts.s_n1 = 2.0 * sum_ab / n2;
  parts.s_n21 = 2.0 * sum_a / n2;
  parts.s_n22 = 2.0 * sum_b / n2;
  parts.s_n2 = parts.s_n21 * parts.s_n22;
  double s3 = 0.0;
  for (std::size_t j = 0; j < n; ++j) s3 += row_a[j] * row_b[j];
  parts.s_n3 = s3 / (n2 * static_cast<double>(n));
  parts.vn2 = parts.s_n1 + parts.s_n2 - 2.0 * parts.s_n3;
  return parts;
}

double dc_stat(const Eigen::VectorXd& v, const Eigen::VectorXd& z) {
  const auto parts = dcov_parts(v, z);
  if (parts.s_n2 == 0.0) return 0.0;
  return std::sqrt(static_cast<double>(v.size())) * parts.vn2 / parts.s_n2;
}

bool ScreenReport::contains(std::size_t index) const {
  return std::binary_search(selected.begin(), selected.end(), index);
}

ScreenReport screen_topk(const Eigen::VectorXd& v, const Eigen::MatrixXd& Z,
                         std::size_t p_tilde) {
  if (p_tilde < 1) throw DataError("screen_topk: p_tilde must be at least 1");
  ScreenReport report = screen_common(v, Z);
  report.rule.kind = ScreenRule::Kind::top_k;
  report.rule.p_tilde = p_tilde;
  const std::size_t keep = std::min(p_tilde, report.stats.size());
  for (std::size_t i = 0; i < keep; ++i) report.selected.push_back(report.stats[i].index);
  std::sort(report.selected.begin(), report.selected.end());
  return report;
}

ScreenReport screen_threshold(const Eigen::VectorXd& v, const Eigen::MatrixXd& Z, double c) {
  if (!(c > 0.0)) throw DataError("screen_threshold: c must be positive");
  if (v.size() < 3) throw DataError("screen_threshold: need n >= 3");
  ScreenReport report = screen_common(v, Z);
  report.rule.kind = ScreenRule::Kind::threshold;
  report.rule.c = c;
  report.rule.threshold = c * std::pow(std::log(static_cast<double>(v.size())), 0.75);
  for (const auto& s : report.stats) {
    if (s.t_hat >= report.rule.threshold) report.selected.push_back(s.index);
  }
  std::sort(report.selected.begin(), report.selected.end());
  return report;
}

std::pair<double, double> tpr_fdr(const std::vector<std::size_t>& selected,
                                  const std::vector<std::size_t>& truth, std::size_t p_n) {
  for (const auto i : selected) {
    if (i >= p_n) throw DataError("tpr_fdr: selected index out of range");
  }
  for (const auto i : truth) {
    if (i >= p_n) throw DataError("tpr_fdr: truth index out of range");
  }
  const std::set<std::size_t> truth_set(truth.begin(), truth.end());
  std::size_t hits = 0;
  std::size_t false_hits = 0;
  const std::set<std::size_t> sel_set(selected.begin(), selected.end());
  for (const auto i : sel_set) {
    if (truth_set.count(i)) {
      ++hits;
    } else {
      ++false_hits;
    }
  }
  const double tpr = truth_set.empty()
                         ? 1.0
                         : static_cast<double>(hits) / static_cast<double>(truth_set.size());
  const double fdr = static_cast<double>(false_hits) / static_cast<double>(sel_set.size() + 1);
  return {tpr, fdr};
}

}  // namespace specreg
