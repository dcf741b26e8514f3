#ifndef ORBITWIDTH_GT_PATTERN_HPP
#define ORBITWIDTH_GT_PATTERN_HPP

#include <map>
#include <string>
#include <vector>

#include "orbitwidth/types.hpp"

namespace orbitwidth {

/// Triangular array of Gelfand-Tsetlin values: row k (k = 2..top-1) holds
/// floor(k/2) reals x^{(k)}_j; the top row (level 2n+1 for B, 2n for D) is
/// lambda itself.
struct GTPattern {
  GroupSpec group;
  std::vector<double> lambda;
  std::map<int, std::vector<double>> rows;

  int top_level() const { return group.matrix_size(); }
  /// x^{(level)}_j (1-based j); level == top_level() reads lambda.
  double value_at(int level, int j) const;
  /// n^2 for B, n(n-1) for D.
  int coordinate_count() const;
  /// Throws InvalidInput unless rows have exactly the levels 2..top-1 with
  /// floor(k/2) entries each and lambda has rank entries.
  void check_shape() const;
  /// Flat index of coordinate x^{(level)}_j (levels ascending, j ascending).
  int coordinate_index(int level, int j) const;
  static std::string coordinate_name(int level, int j);  // "x4_2"
};

/// One violated interlacing inequality: lhs >= rhs failed by `amount`.
struct PatternViolation {
  int level;      // level of the offending (right-hand) coordinate
  int position;   // its 1-based index
  double amount;  // by how much the inequality fails (positive)
  std::string description;
};

/// The distinguished vertex: every coordinate at its upper bound lambda_j.
GTPattern pattern_of_lambda(const GroupSpec& group, const WeylPoint& lambda);

/// Checks every inequality of the two interlacing chains with slack tol;
/// returns the (possibly empty) violation list. Shape errors throw.
std::vector<PatternViolation> validate_pattern(const GTPattern& p,
                                               double tol);

/// Edge of the pattern polytope at the vertex of upper bounds. The moving
/// coordinates x^{(l)}_j, l = 2j..level, stay equal to one another and
/// sweep [endpoint_low, endpoint_high]; the isotropy weight is the 0/1
/// indicator of exactly those coordinates (a primitive vector).
struct EdgeDescriptor {
  enum class Kind { E, F };
  Kind kind;
  int level;  // 2k for E, 2k+1 for F
  int j;
  std::vector<int> weight;  // over pattern coordinates, entries in {0,1}
  double lattice_length;
  double endpoint_low;
  double endpoint_high;
  /// D family, kind F, k = j = n-1: the segment is a subset of a polytope
  /// edge rather than a full edge; the full length is still reported.
  bool subset_of_edge = false;

  std::string name() const;  // "E(4,2)"
};

/// All edges at the vertex of lambda (regular lambda required): E^{(2k)}_j
/// for k = 1..n (B) / 1..n-1 (D), then F^{(2k+1)}_j for k = 1..n-1, j <= k.
std::vector<EdgeDescriptor> enumerate_edges_at_lambda(const GroupSpec& group,
                                                      const WeylPoint& lambda);

/// Pattern on the edge: the vertex pattern with the edge's coordinates set
/// to endpoint_high - t * lattice_length, t in [0,1].
GTPattern edge_point(const EdgeDescriptor& e, const WeylPoint& lambda,
                     double t);

/// Structural edge data shared by the float and rational lanes.
struct EdgeShape {
  EdgeDescriptor::Kind kind;
  int k;
  int j;
  bool subset_of_edge;
};

std::vector<EdgeShape> edge_shapes(const GroupSpec& group);

/// Lattice length of one edge as an exact linear form in lambda:
/// E with j<k and every F except the D corner -> lambda_j - lambda_{j+1};
/// E with j=k -> 2*lambda_k; F in D with k=j=n-1 -> lambda_{n-1} - |lambda_n|.
template <class T>
T edge_length_t(const GroupSpec& group, const EdgeShape& e,
                const std::vector<T>& lambda) {
  const int n = group.rank;
  if (e.kind == EdgeDescriptor::Kind::E && e.j == e.k)
    return T(2) * lambda[e.k - 1];
  if (e.kind == EdgeDescriptor::Kind::F && group.family == Family::D &&
      e.k == n - 1 && e.j == n - 1)
    return lambda[n - 2] - abs_val(lambda[n - 1]);
  return lambda[e.j - 1] - lambda[e.j];
}

template <class T>
T min_edge_length_t(const GroupSpec& group, const std::vector<T>& lambda) {
  const auto shapes = edge_shapes(group);
  T best = edge_length_t(group, shapes.front(), lambda);
  for (const EdgeShape& e : shapes) {
    T len = edge_length_t(group, e, lambda);
    if (len < best) best = len;
  }
  return best;
}

}  // namespace orbitwidth

#endif
