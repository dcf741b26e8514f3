#include "orbitwidth/reconstruction.hpp"

#include <cmath>
#include <sstream>

namespace orbitwidth {

namespace {

double clamped_sqrt(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

// Weak descending-chain check outer_1 >= inner_1 >= outer_2 >= ... with the
// shared relative slack; the final comparison is against |inner_last| or
// |outer_last| depending on parity of the chain.
void require_ge(double lhs, double rhs, const char* what) {
  if (lhs >= rhs || detail::nearly_equal(lhs, rhs)) return;
  std::ostringstream msg;
  msg << "interlacing violated: " << what << " (" << lhs << " < " << rhs
      << ")";
  throw NoSolution(msg.str());
}

std::vector<double> resolve_gauge(const std::vector<double>& gauge,
                                  int circles) {
  if (gauge.empty()) return std::vector<double>(circles, 0.0);
  if (static_cast<int>(gauge.size()) != circles)
    throw InvalidInput("gauge angle count must match the circle count");
  return gauge;
}

}  // namespace

BorderSolution extend_odd(const InterlacingPair& pair,
                          const std::vector<double>& gauge_angles) {
  if (pair.parity != InterlacingPair::Parity::odd_extension)
    throw InvalidInput("extend_odd needs an odd_extension pair");
  const std::vector<double>& a = pair.inner;
  const std::vector<double>& b = pair.outer;
  const int k = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != k || k == 0)
    throw InvalidInput("odd extension needs equally many inner and outer values");
  // b_1 >= a_1 >= b_2 >= ... >= b_k >= |a_k|
  for (int j = 0; j + 1 < k; ++j) {
    require_ge(b[j], a[j], "b_j >= a_j");
    require_ge(a[j], b[j + 1], "a_j >= b_{j+1}");
  }
  require_ge(b[k - 1], std::fabs(a[k - 1]), "b_k >= |a_k|");

  std::vector<double> a_sq(k), b_sq(k);
  for (int j = 0; j < k; ++j) {
    a_sq[j] = a[j] * a[j];
    b_sq[j] = b[j] * b[j];
  }
  std::vector<double> w = solve_cauchy_weights(a_sq, b_sq);
  const std::vector<double> gauge = resolve_gauge(gauge_angles, k);
  BorderSolution sol;
  sol.circle_norms.resize(k);
  sol.y.assign(2 * k, 0.0);
  for (int l = 0; l < k; ++l) {
    const double wl = std::max(w[l], 0.0);
    sol.circle_norms[l] = wl;
    const double r = clamped_sqrt(wl);
    sol.y[2 * l] = r * std::cos(gauge[l]);
    sol.y[2 * l + 1] = r * std::sin(gauge[l]);
  }
  return sol;
}

ArrowSolution arrow_matrix_solve(const std::vector<double>& nu,
                                 const std::vector<double>& mu) {
  const int d = static_cast<int>(nu.size());
  if (d == 0 || static_cast<int>(mu.size()) != d + 1)
    throw InvalidInput("arrow problem needs |mu| = |nu| + 1 >= 2");
  for (int i = 0; i < d; ++i) {
    require_ge(mu[i], nu[i], "mu_i >= nu_i");
    require_ge(nu[i], mu[i + 1], "nu_i >= mu_{i+1}");
  }
  ArrowSolution sol;
  sol.norms_sq.assign(d, 0.0);
  double tip = 0.0;
  for (double m : mu) tip += m;
  for (double v : nu) tip -= v;
  sol.tip = tip;

  // Degenerate reduction: a nu value matching a mu value forces its border
  // entry to zero; both leave the system.
  std::vector<int> ni(d);
  std::vector<double> nv(nu), mv(mu);
  for (int i = 0; i < d; ++i) ni[i] = i;
  bool reduced = true;
  while (reduced && !nv.empty()) {
    reduced = false;
    for (size_t i = 0; i < nv.size() && !reduced; ++i) {
      for (size_t j = 0; j < mv.size() && !reduced; ++j) {
        if (detail::nearly_equal(nv[i], mv[j])) {
          sol.norms_sq[ni[i]] = 0.0;
          nv.erase(nv.begin() + i);
          ni.erase(ni.begin() + i);
          mv.erase(mv.begin() + j);
          reduced = true;
        }
      }
    }
  }
  for (size_t i = 0; i < nv.size(); ++i) {
    double num = -1.0, den = 1.0;
    for (double m : mv) num *= nv[i] - m;
    for (size_t l = 0; l < nv.size(); ++l)
      if (l != i) den *= nv[i] - nv[l];
    sol.norms_sq[ni[i]] = std::max(num / den, 0.0);
  }
  return sol;
}

Eigen::MatrixXd assemble_arrow(const std::vector<double>& nu,
                               const std::vector<double>& norms_sq,
                               double tip) {
  const int d = static_cast<int>(nu.size());
  if (static_cast<int>(norms_sq.size()) != d)
    throw InvalidInput("arrow assembly needs one border norm per diagonal value");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (int i = 0; i < d; ++i) {
    a(i, i) = nu[i];
    a(i, d) = a(d, i) = clamped_sqrt(norms_sq[i]);
  }
  a(d, d) = tip;
  return a;
}

BorderSolution extend_even(const InterlacingPair& pair,
                           const std::vector<double>& gauge_angles) {
  if (pair.parity != InterlacingPair::Parity::even_extension)
    throw InvalidInput("extend_even needs an even_extension pair");
  const std::vector<double>& b = pair.inner;
  const std::vector<double>& a = pair.outer;
  const int k = static_cast<int>(a.size());
  if (k == 0 || static_cast<int>(b.size()) != k - 1)
    throw InvalidInput("even extension needs k outer and k-1 inner values");
  // a_1 >= b_1 >= a_2 >= ... >= b_{k-1} >= |a_k|
  for (int j = 0; j + 1 < k; ++j) {
    require_ge(a[j], b[j], "a_j >= b_j");
    if (j + 2 < k) require_ge(b[j], a[j + 1], "b_j >= a_{j+1}");
  }
  if (k >= 2) require_ge(b[k - 2], std::fabs(a[k - 1]), "b_{k-1} >= |a_k|");

  const std::vector<double> gauge = resolve_gauge(gauge_angles, k - 1);
  BorderSolution sol;
  sol.circle_norms.assign(k - 1, 0.0);
  sol.y.assign(2 * k - 1, 0.0);

  // When the inner row repeats a_1..a_{k-1} exactly, the bordered matrix is
  // the canonical embedding itself; keep that case bit-exact.
  bool trivial = true;
  for (int j = 0; j + 1 < k; ++j)
    if (b[j] != a[j]) trivial = false;
  if (trivial) {
    sol.y[2 * k - 2] = -a[k - 1];
    return sol;
  }

  std::vector<double> nu(2 * k - 1), mu(2 * k);
  for (int j = 0; j < k - 1; ++j) {
    nu[j] = b[j];
    nu[2 * k - 2 - j] = -b[j];
  }
  nu[k - 1] = 0.0;
  for (int j = 0; j < k - 1; ++j) {
    mu[j] = a[j];
    mu[2 * k - 1 - j] = -a[j];
  }
  mu[k - 1] = std::fabs(a[k - 1]);
  mu[k] = -std::fabs(a[k - 1]);
  const ArrowSolution arrow = arrow_matrix_solve(nu, mu);

  for (int j = 0; j < k - 1; ++j) {
    const double wj = arrow.norms_sq[j] + arrow.norms_sq[2 * k - 2 - j];
    sol.circle_norms[j] = wj;
    const double r = clamped_sqrt(wj);
    sol.y[2 * j] = r * std::cos(gauge[j]);
    sol.y[2 * j + 1] = r * std::sin(gauge[j]);
  }
  const double center = arrow.norms_sq[k - 1];
  const double scale = 1.0 + std::fabs(a[0]);
  if (center <= 0.0 && std::fabs(a[k - 1]) > 1e-12 * scale)
    throw NumericError(
        "pfaffian sign unresolvable: border center vanished but a_k != 0");
  // Pf(bordered) = y_{2k-1} * prod(-b_l) must equal prod(-a_j); with
  // b_l > 0 and a_j > 0 for j < k this forces sign(y_{2k-1}) = -sign(a_k).
  const double mag = clamped_sqrt(center);
  sol.y[2 * k - 2] = a[k - 1] > 0.0 ? -mag : (a[k - 1] < 0.0 ? mag : 0.0);
  return sol;
}

SkewMatrix assemble_bordered(const InterlacingPair& pair,
                             const std::vector<double>& y) {
  const bool odd = pair.parity == InterlacingPair::Parity::odd_extension;
  const int inner_count = static_cast<int>(pair.inner.size());
  const int m = odd ? 2 * inner_count + 1 : 2 * inner_count + 2;
  if (static_cast<int>(y.size()) != m - 1)
    throw InvalidInput("bordering column has the wrong length");
  const SkewMatrix core = skew_block_diag(pair.inner, !odd);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  a.topLeftCorner(m - 1, m - 1) = core.mat();
  for (int i = 0; i < m - 1; ++i) {
    a(i, m - 1) = y[i];
    a(m - 1, i) = -y[i];
  }
  return SkewMatrix(a);
}

ReconstructionReport build_orbit_point_report(
    const GroupSpec& group, const WeylPoint& lambda, const GTPattern& p,
    const std::map<int, std::vector<double>>& gauges) {
  if (!(p.group == group) || !(lambda.group == group))
    throw InvalidInput("group mismatch between pattern, lambda and request");
  if (p.lambda != lambda.coords)
    throw InvalidInput("pattern top row must equal lambda");
  double scale = 1.0;
  for (double v : lambda.coords) scale = std::max(scale, 1.0 + std::fabs(v));
  {
    const auto violations = validate_pattern(p, 1e-10 * scale);
    if (!violations.empty())
      throw NoSolution("pattern violates interlacing: " +
                       violations.front().description);
  }

  const int top = group.matrix_size();
  auto row = [&](int level) -> const std::vector<double>& {
    return level == top ? lambda.coords : p.rows.at(level);
  };

  ReconstructionReport report{skew_block_diag(row(2), false), 0.0, {}};
  for (int m = 3; m <= top; ++m) {
    const std::vector<double>& inner = row(m - 1);
    const std::vector<double>& outer = row(m);
    const Eigen::MatrixXd conj =
        canonical_conjugator(report.matrix, inner, 1e-7);
    {
      const SkewMatrix canon = skew_block_diag(inner, (m - 1) % 2 != 0);
      const Eigen::MatrixXd delta =
          conj * report.matrix.mat() * conj.transpose() - canon.mat();
      report.per_level_residuals.push_back(
          delta.cwiseAbs().maxCoeff());
    }

    InterlacingPair pair;
    pair.parity = m % 2 != 0 ? InterlacingPair::Parity::odd_extension
                             : InterlacingPair::Parity::even_extension;
    pair.inner = inner;
    pair.outer = outer;
    const auto git = gauges.find(m);
    const std::vector<double> gauge =
        git == gauges.end() ? std::vector<double>{} : git->second;
    const BorderSolution border = m % 2 != 0 ? extend_odd(pair, gauge)
                                             : extend_even(pair, gauge);

    Eigen::VectorXd yv(m - 1);
    for (int i = 0; i < m - 1; ++i) yv(i) = border.y[i];
    const Eigen::VectorXd col = conj.transpose() * yv;
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(m, m);
    next.topLeftCorner(m - 1, m - 1) = report.matrix.mat();
    for (int i = 0; i < m - 1; ++i) {
      next(i, m - 1) = col(i);
      next(m - 1, i) = -col(i);
    }
    report.matrix = SkewMatrix(next);
  }

  report.charpoly_residual = char_poly_residual(
      char_poly(report.matrix), char_poly(embed_lambda(lambda)));
  if (report.charpoly_residual > 1e-7) {
    std::ostringstream msg;
    msg << "reconstruction drifted off the orbit: characteristic polynomial "
           "residual "
        << report.charpoly_residual << " exceeds 1e-7";
    throw NumericError(msg.str());
  }
  return report;
}

SkewMatrix build_orbit_point(const GroupSpec& group, const WeylPoint& lambda,
                             const GTPattern& p,
                             const std::map<int, std::vector<double>>& gauges) {
  return build_orbit_point_report(group, lambda, p, gauges).matrix;
}

}  // namespace orbitwidth
