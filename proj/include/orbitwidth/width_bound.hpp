#ifndef ORBITWIDTH_WIDTH_BOUND_HPP
#define ORBITWIDTH_WIDTH_BOUND_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitwidth/gt_pattern.hpp"
#include "orbitwidth/orbit_matrix.hpp"
#include "orbitwidth/root_system.hpp"
#include "orbitwidth/types.hpp"

namespace orbitwidth {

enum class BoundMode { regular, nonregular_B, nonregular_D };

/// Lower bound for the Gromov width of the orbit, with both witnesses so a
/// disagreement between the edge route and the coroot route surfaces.
struct BoundReport {
  GroupSpec group;
  std::vector<double> lambda;
  double bound;
  Coroot witness_coroot;
  std::optional<EdgeDescriptor> witness_edge;
  BoundMode mode;
  GTPattern center_vertex;  // vertex pattern of lambda, or of eta
  std::vector<double> eta_edge_lengths;  // nonregular modes only
  double capacity;     // of the embedded ball; equals bound
  int ball_dimension;  // 2N, the dimension of the orbit
};

/// A root written in the e-basis (integer coefficients).
struct RootVector {
  std::vector<int> coeffs;

  int dot(const RootVector& o) const;
  int norm_sq() const;
  std::string name() const;  // "e1+e2", "e2"
};

/// Parses "e1", "e1+e2", "e1-e2" (1-based indices up to rank).
RootVector parse_root(const std::string& text, int rank);

enum class ComparisonConclusion { standard_weaker, no_intersection };

/// Data comparing the centered region of the standard torus with the
/// coroot bound at p.
struct CenteredComparison {
  std::vector<double> p;
  RootVector alpha;
  RootVector beta;
  double t_cut;         // |<beta,p> / <beta,alpha>|; 0 when no intersection
  double coroot_bound;  // <beta^vee, p>
  ComparisonConclusion conclusion;
};

/// Regular-orbit lower bound: minimum edge lattice length at the vertex of
/// lambda, cross-checked against the minimum coroot pairing (the two must
/// agree exactly). Non-regular input raises InvalidInput naming
/// nonregular_bound.
BoundReport gromov_width_lower_bound(const GroupSpec& group,
                                     const WeylPoint& lambda);

/// Single-block non-regular bound: B -> min over strictly positive coroot
/// pairings; D -> min{2|lambda_n|, that minimum}. The centering vertex is
/// the pattern of the reordered eta point.
BoundReport nonregular_bound(const GroupSpec& group, const WeylPoint& lambda);

/// Exact-lane version of the single-block bound formula.
template <class T>
T nonregular_bound_t(const GroupSpec& group, const std::vector<T>& lambda) {
  T best = min_coroot_pairing_t(group, lambda, /*positive_only=*/true);
  if (group.family == Family::D) {
    T twice = T(2) * abs_val(lambda[group.rank - 1]);
    if (twice < best) best = twice;
  }
  return best;
}

/// The eta point of a non-regular lambda: distinct values first
/// (lambda_1..lambda_s, lambda_{s+l}..lambda_n), then l-1 repeats of
/// lambda_s; matrix is its block embedding (trailing zero for B) and
/// pattern its Gelfand-Tsetlin image. Regular input degenerates to
/// embed_lambda, flagged.
struct EtaVertex {
  std::vector<double> eta;
  SkewMatrix matrix;
  GTPattern pattern;
  bool regular_degenerate;
};

EtaVertex eta_vertex(const GroupSpec& group, const WeylPoint& lambda);

/// Root-pair comparison: for roots with ||alpha|| > ||beta||, the standard
/// torus centered region is cut at t_cut = |<beta,p>/<beta,alpha>| when
/// <beta,alpha> != 0 (strictly below the coroot bound), else the relevant
/// fixed components do not intersect. Equal-length roots are unsupported.
CenteredComparison standard_torus_comparison(const GroupSpec& group,
                                             const WeylPoint& p,
                                             const RootVector& alpha,
                                             const RootVector& beta);

}  // namespace orbitwidth

#endif
