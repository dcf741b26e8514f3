#include "orbitwidth/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "orbitwidth/reconstruction.hpp"
#include "orbitwidth/root_system.hpp"

namespace orbitwidth {

namespace {

double lambda_scale(const std::vector<double>& coords) {
  double s = 1.0;
  for (double v : coords) s = std::max(s, 1.0 + std::fabs(v));
  return s;
}

}  // namespace

Eigen::MatrixXd random_special_orthogonal(int m, std::uint64_t seed) {
  if (m < 1) throw InvalidInput("matrix size must be at least 1");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = gauss(gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
  const Eigen::MatrixXd r = qr.matrixQR();
  // Fixing sign(diag R) > 0 makes Q the unique Haar-distributed factor.
  for (int j = 0; j < m; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  if (q.determinant() < 0.0) q.col(m - 1) = -q.col(m - 1);
  return q;
}

SkewMatrix random_orbit_point(const WeylPoint& lambda, std::uint64_t seed) {
  const int m = lambda.group.matrix_size();
  const Eigen::MatrixXd q = random_special_orthogonal(m, seed);
  return SkewMatrix::project(q * embed_lambda(lambda).mat() * q.transpose());
}

GTPattern sample_valid_pattern(const GroupSpec& group, const WeylPoint& lambda,
                               std::uint64_t seed) {
  GTPattern p = pattern_of_lambda(group, lambda);
  std::mt19937_64 gen(seed);
  auto uniform = [&](double lo, double hi) {
    if (!(lo < hi)) return lo;
    std::uniform_real_distribution<double> dist(lo, hi);
    return std::min(std::max(dist(gen), lo), hi);
  };
  const int top = p.top_level();
  for (int m = top - 1; m >= 2; --m) {
    auto above = [&](int j) { return p.value_at(m + 1, j); };
    std::vector<double>& row = p.rows.at(m);
    if (m % 2 == 0) {
      // x_j in [y_{j+1}, y_j] for j < k, x_k in [-y_k, y_k]
      const int k = m / 2;
      for (int j = 1; j < k; ++j) row[j - 1] = uniform(above(j + 1), above(j));
      row[k - 1] = uniform(-above(k), above(k));
    } else {
      // x_j in [y_{j+1}, y_j] for j <= k-2, x_{k-1} in [|y_k|, y_{k-1}]
      const int k = (m + 1) / 2;
      for (int j = 1; j <= k - 2; ++j)
        row[j - 1] = uniform(above(j + 1), above(j));
      row[k - 2] = uniform(std::fabs(above(k)), above(k - 1));
    }
  }
  return p;
}

VerifyReport verify_interlacing(const WeylPoint& lambda, int trials,
                                std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  VerifyReport report;
  report.trials = trials;
  report.tolerance_used = 1e-8 * lambda_scale(lambda.coords);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    const SkewMatrix point = random_orbit_point(lambda, trial_seed);
    const GTPattern pattern = gt_map(point, lambda.group);
    const auto violations = validate_pattern(pattern, 0.0);
    double worst = 0.0;
    for (const auto& v : violations) worst = std::max(worst, v.amount);
    report.max_residual = std::max(report.max_residual, worst);
    if (worst > report.tolerance_used) {
      std::ostringstream payload;
      payload << violations.size() << " violated inequalities; first: "
              << violations.front().description;
      report.failures.push_back(
          {trial_seed, "interlacing", worst, payload.str()});
    }
  }
  return report;
}

VerifyReport verify_roundtrip(const WeylPoint& lambda, int trials,
                              std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  if (chamber_classify(lambda).kind != ChamberKind::regular)
    throw InvalidInput("round-trip verification needs a regular lambda");
  VerifyReport report;
  report.trials = trials;
  report.tolerance_used = 1e-7 * lambda_scale(lambda.coords);
  const std::vector<double> target_cp = char_poly(embed_lambda(lambda));
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    const GTPattern sampled =
        sample_valid_pattern(lambda.group, lambda, trial_seed);
    try {
      const SkewMatrix point = build_orbit_point(lambda.group, lambda, sampled);
      const GTPattern back = gt_map(point, lambda.group);
      double coord = 0.0;
      for (const auto& [level, row] : sampled.rows)
        for (size_t j = 0; j < row.size(); ++j)
          coord = std::max(coord, std::fabs(row[j] - back.rows.at(level)[j]));
      const double cp = char_poly_residual(char_poly(point), target_cp);
      const double worst = std::max(coord, cp);
      report.max_residual = std::max(report.max_residual, worst);
      if (worst > report.tolerance_used)
        report.failures.push_back(
            {trial_seed, "roundtrip", worst,
             "coordinate residual " + std::to_string(coord) +
                 ", charpoly residual " + std::to_string(cp)});
    } catch (const std::exception& e) {
      report.max_residual = std::numeric_limits<double>::infinity();
      report.failures.push_back({trial_seed, "roundtrip_exception",
                                 std::numeric_limits<double>::infinity(),
                                 e.what()});
    }
  }
  return report;
}

}  // namespace orbitwidth
