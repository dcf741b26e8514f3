#ifndef ORBITWIDTH_RECONSTRUCTION_HPP
#define ORBITWIDTH_RECONSTRUCTION_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "orbitwidth/gt_pattern.hpp"
#include "orbitwidth/orbit_matrix.hpp"
#include "orbitwidth/types.hpp"

namespace orbitwidth {

/// Interlacing data for one extension step.
/// odd_extension (level 2k -> 2k+1): inner a_1..a_k (even-level chamber),
/// outer b_1..b_k with b_1 >= a_1 >= b_2 >= ... >= b_k >= |a_k|.
/// even_extension (level 2k-1 -> 2k): inner b_1..b_{k-1} (odd-level
/// chamber), outer a_1..a_k with a_1 >= b_1 >= a_2 >= ... >= b_{k-1} >= |a_k|.
struct InterlacingPair {
  enum class Parity { odd_extension, even_extension };
  Parity parity;
  std::vector<double> inner;
  std::vector<double> outer;
};

/// Bordering column determined up to one rotation per circle; only the
/// circle norms w_l = y_{2l-1}^2 + y_{2l}^2 (and, in the even case, the
/// final entry y_{2k-1}) are intrinsic.
struct BorderSolution {
  std::vector<double> y;
  std::vector<double> circle_norms;
};

namespace detail {
template <class T>
bool nearly_equal(const T& x, const T& y) {
  return x == y;
}
inline bool nearly_equal(double x, double y) {
  return std::fabs(x - y) <= 1e-10 * (1.0 + std::max(std::fabs(x), std::fabs(y)));
}
}  // namespace detail

/// Closed-form solution of the Cauchy system
///   sum_l w_l / (b_s^2 - a_l^2) = 1,  s = 1..k,
/// taking the squared spectra directly:
///   w_l = -prod_j(a_l^2 - b_j^2) / prod_{j != l}(a_l^2 - a_j^2).
/// Inputs must interlace weakly (b_1^2 >= a_1^2 >= b_2^2 >= ...), both
/// sorted descending. Matched pairs (equal within 1e-10 relative, exact for
/// Rational) force w = 0 at the matched index and reduce to a smaller
/// regular system, scanning from the largest value downward.
template <class T>
std::vector<T> solve_cauchy_weights(const std::vector<T>& a_sq,
                                    const std::vector<T>& b_sq) {
  const int k = static_cast<int>(a_sq.size());
  if (static_cast<int>(b_sq.size()) != k)
    throw InvalidInput("cauchy system needs equally many a^2 and b^2");
  for (int i = 0; i < k; ++i) {
    if (b_sq[i] < a_sq[i] && !detail::nearly_equal(b_sq[i], a_sq[i]))
      throw NoSolution("interlacing violated: b_i^2 >= a_i^2 fails");
    if (i + 1 < k && a_sq[i] < b_sq[i + 1] &&
        !detail::nearly_equal(a_sq[i], b_sq[i + 1]))
      throw NoSolution("interlacing violated: a_i^2 >= b_{i+1}^2 fails");
  }
  std::vector<T> w(k, T(0));
  // Active (index into w, value) pairs surviving the degenerate reduction.
  std::vector<int> ai(k);
  std::vector<T> av(a_sq), bv(b_sq);
  for (int i = 0; i < k; ++i) ai[i] = i;
  bool reduced = true;
  while (reduced && !av.empty()) {
    reduced = false;
    // Values are sorted descending, so the smallest surviving index holds
    // the largest value: scan top down, drop one matched pair per pass.
    for (size_t l = 0; l < av.size() && !reduced; ++l) {
      for (size_t j = 0; j < bv.size() && !reduced; ++j) {
        if (detail::nearly_equal(av[l], bv[j])) {
          w[ai[l]] = T(0);
          av.erase(av.begin() + l);
          ai.erase(ai.begin() + l);
          bv.erase(bv.begin() + j);
          reduced = true;
        }
      }
    }
  }
  for (size_t l = 0; l < av.size(); ++l) {
    T num(-1), den(1);
    for (const T& b : bv) num *= av[l] - b;
    for (size_t j = 0; j < av.size(); ++j)
      if (j != l) den *= av[l] - av[j];
    w[ai[l]] = num / den;
  }
  return w;
}

/// Odd extension: Y of length 2k with circle norms from the Cauchy system,
/// so that the bordered (2k+1)x(2k+1) matrix with top-left
/// diag(L(a_1),...,L(a_k)) has characteristic polynomial t*prod(t^2+b_j^2).
/// gauge_angles (default all 0) rotate each circle:
/// (y_{2l-1}, y_{2l}) = sqrt(w_l) * (cos g_l, sin g_l).
BorderSolution extend_odd(const InterlacingPair& pair,
                          const std::vector<double>& gauge_angles = {});

/// Hermitian arrow (bordered-diagonal) inverse eigenvalue problem: returns
/// the squared border norms |x_i|^2 and the tip x_{2k} so that the arrow
/// matrix with diagonal (nu_1,...,nu_{2k-1}, x_{2k}) and border |x_i| has
/// eigenvalues mu. Requires mu_1 >= nu_1 >= mu_2 >= ... >= nu_{2k-1} >= mu_{2k}.
struct ArrowSolution {
  std::vector<double> norms_sq;  // |x_i|^2, i = 1..2k-1
  double tip;                    // x_{2k} = sum(mu) - sum(nu)
};

ArrowSolution arrow_matrix_solve(const std::vector<double>& nu,
                                 const std::vector<double>& mu);

/// Real symmetric arrow matrix with the given diagonal, border magnitudes
/// sqrt(norms_sq) and tip; its spectrum realizes mu (test oracle).
Eigen::MatrixXd assemble_arrow(const std::vector<double>& nu,
                               const std::vector<double>& norms_sq,
                               double tip);

/// Even extension: Y of length 2k-1 making the 2k x 2k matrix with top-left
/// diag(L(b_1),...,L(b_{k-1}),0) special-orthogonally conjugate to
/// diag(L(a_1),...,L(a_k)). Circle norms come from the arrow problem on the
/// doubled symmetric spectra; the final entry's sign is fixed by matching
/// the Pfaffian of the assembled matrix to prod(-a_j).
BorderSolution extend_even(const InterlacingPair& pair,
                           const std::vector<double>& gauge_angles = {});

/// Assembles the bordered matrix [[diag-blocks, Y],[-Y^T, 0]] for either
/// parity (odd: blocks L(inner_j); even: blocks L(inner_j) plus one zero).
SkewMatrix assemble_bordered(const InterlacingPair& pair,
                             const std::vector<double>& y);

/// Reconstruction trace for reporting.
struct ReconstructionReport {
  SkewMatrix matrix;
  double charpoly_residual;
  std::vector<double> per_level_residuals;  // conjugator residual per level
};

/// Builds a matrix on the orbit of lambda realizing the pattern: bottom-up
/// recursion M_m = [[M_{m-1}, B^T Y],[-Y^T B, 0]] where B is the canonical
/// conjugator of M_{m-1} and Y the bordering column for the next row.
/// gauges maps level -> gauge angles for that level's circles. Accumulated
/// residual beyond 1e-7 raises NumericError carrying the per-level report.
SkewMatrix build_orbit_point(
    const GroupSpec& group, const WeylPoint& lambda, const GTPattern& p,
    const std::map<int, std::vector<double>>& gauges = {});

ReconstructionReport build_orbit_point_report(
    const GroupSpec& group, const WeylPoint& lambda, const GTPattern& p,
    const std::map<int, std::vector<double>>& gauges = {});

}  // namespace orbitwidth

#endif
