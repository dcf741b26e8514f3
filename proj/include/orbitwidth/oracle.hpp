#ifndef ORBITWIDTH_ORACLE_HPP
#define ORBITWIDTH_ORACLE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "orbitwidth/gt_pattern.hpp"
#include "orbitwidth/orbit_matrix.hpp"
#include "orbitwidth/types.hpp"

namespace orbitwidth {

/// One failed trial of a verification suite.
struct VerifyFailure {
  std::uint64_t seed;
  std::string kind;
  double residual;
  std::string payload;
};

/// Aggregated result; failures is empty exactly when
/// max_residual <= tolerance_used.
struct VerifyReport {
  int trials = 0;
  std::vector<VerifyFailure> failures;
  double max_residual = 0.0;
  double tolerance_used = 0.0;
};

/// Haar-distributed special orthogonal matrix, deterministic per seed:
/// QR of a seeded Gaussian matrix, R-diagonal sign fix, then a last-column
/// flip whenever the determinant lands at -1.
Eigen::MatrixXd random_special_orthogonal(int m, std::uint64_t seed);

/// Q * embed_lambda(lambda) * Q^T for Haar Q, exactly skew-symmetrized.
SkewMatrix random_orbit_point(const WeylPoint& lambda, std::uint64_t seed);

/// Uniform valid pattern: coordinates sampled level by level from the top,
/// each uniform in the interval its interlacing chain allows.
GTPattern sample_valid_pattern(const GroupSpec& group, const WeylPoint& lambda,
                               std::uint64_t seed);

/// gt_map of random orbit points validated against the interlacing chains
/// with tolerance 1e-8*(1+max|lambda|). Per-trial seeds are seed+index.
VerifyReport verify_interlacing(const WeylPoint& lambda, int trials,
                                std::uint64_t seed);

/// Random valid patterns run through build_orbit_point and gt_map;
/// residual is the worst of coordinatewise distance and char-poly distance
/// from the embedding of lambda. Tolerance 1e-7*(1+max|lambda|).
VerifyReport verify_roundtrip(const WeylPoint& lambda, int trials,
                              std::uint64_t seed);

}  // namespace orbitwidth

#endif
