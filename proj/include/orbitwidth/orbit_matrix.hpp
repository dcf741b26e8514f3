#ifndef ORBITWIDTH_ORBIT_MATRIX_HPP
#define ORBITWIDTH_ORBIT_MATRIX_HPP

#include <Eigen/Dense>
#include <vector>

#include "orbitwidth/gt_pattern.hpp"
#include "orbitwidth/types.hpp"

namespace orbitwidth {

/// Dense real skew-symmetric matrix; entries(i,j) == -entries(j,i) holds
/// exactly (checked on construction).
class SkewMatrix {
public:
  explicit SkewMatrix(const Eigen::MatrixXd& entries);

  /// Builds from (A - A^T)/2, which is exactly skew in floating point.
  static SkewMatrix project(const Eigen::MatrixXd& a);

  int size() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

private:
  Eigen::MatrixXd m_;
};

/// Chamber value of a level-k submatrix: values a_1 >= ... >= a_{floor(k/2)}
/// with a sign carried on the last entry only when the level is even.
struct ChamberSpectrum {
  int level;  // matrix size k of the submatrix
  std::vector<double> values;
};

/// Block-diagonal skew matrix with blocks L(v_1),...,L(v_m), where
/// L(a) = [[0,-a],[a,0]], plus one trailing zero row/column if requested.
SkewMatrix skew_block_diag(const std::vector<double>& values,
                           bool trailing_zero);

/// Canonical chamber embedding: blocks L(lambda_1),...,L(lambda_n), with a
/// trailing zero row/column for the B family.
SkewMatrix embed_lambda(const WeylPoint& lambda);

/// Top-left k x k block Phi^k.
SkewMatrix principal_submatrix(const SkewMatrix& m, int k);

/// Monic characteristic polynomial, coefficients [1, c_1, ..., c_m] by
/// descending power, computed by the Faddeev-LeVerrier recurrence (an
/// algebraic route independent of any eigensolver).
std::vector<double> char_poly(const Eigen::MatrixXd& m);
std::vector<double> char_poly(const SkewMatrix& m);

/// max |p_i - q_i| / max(1, |p|_inf, |q|_inf); polynomials must have equal
/// degree.
double char_poly_residual(const std::vector<double>& p,
                          const std::vector<double>& q);

/// Pfaffian of an even-size skew matrix: recursive first-row expansion for
/// size <= 8, Householder skew-tridiagonalization above. Pf(L(a)) = -a.
double pfaffian(const SkewMatrix& m);

/// Unique chamber point on the SO(k)-orbit of m: magnitudes from the
/// paired spectrum of the symmetric PSD matrix -m^2; for even size the sign
/// of the last value is fixed so sign((-1)^k prod a_j) = sign(Pf(m)).
/// Eigenvalue pairing failures beyond 1e-8*(1+max|eig|) raise NumericError.
ChamberSpectrum spectrum_to_chamber(const SkewMatrix& m);

/// The Gelfand-Tsetlin map: row k = spectrum_to_chamber(Phi^k(m)) for
/// k = 2..matrix_size-1, top row = chamber value of m itself.
GTPattern gt_map(const SkewMatrix& m, const GroupSpec& group);

/// Orthogonal B (det +1) with B * m * B^T equal to the canonical block
/// embedding of target (the chamber values of m, signed ordering). Used by
/// the torus action and the reconstruction recursion. post_tol bounds the
/// allowed residual of the conjugated form.
Eigen::MatrixXd canonical_conjugator(const SkewMatrix& m,
                                     const std::vector<double>& target,
                                     double post_tol);

/// Gelfand-Tsetlin torus action at one level: conjugates m by the
/// block-embedded B^-1 t B where B brings Phi^level(m) to canonical form
/// and t has the given rotation angles (radians; one full turn is 2*pi).
/// Angles of exactly zero act as the exact identity. The level must have
/// pairwise distinct, nonzero chamber values (the set U), else a domain
/// error is raised.
SkewMatrix gt_torus_act(const SkewMatrix& m, const GroupSpec& group,
                        int level, const std::vector<double>& angles);

}  // namespace orbitwidth

#endif
