#include "orbitwidth/gt_pattern.hpp"

#include <cmath>
#include <sstream>

#include "orbitwidth/root_system.hpp"

namespace orbitwidth {

double GTPattern::value_at(int level, int j) const {
  if (level == top_level()) return lambda.at(j - 1);
  return rows.at(level).at(j - 1);
}

int GTPattern::coordinate_count() const {
  const int n = group.rank;
  return group.family == Family::B ? n * n : n * (n - 1);
}

void GTPattern::check_shape() const {
  if (static_cast<int>(lambda.size()) != group.rank)
    throw InvalidInput("pattern top row length must equal the rank");
  const int top = top_level();
  if (static_cast<int>(rows.size()) != top - 2)
    throw InvalidInput("pattern must have rows for levels 2..top-1");
  for (int k = 2; k < top; ++k) {
    auto it = rows.find(k);
    if (it == rows.end())
      throw InvalidInput("pattern is missing level " + std::to_string(k));
    if (static_cast<int>(it->second.size()) != k / 2)
      throw InvalidInput("pattern row " + std::to_string(k) +
                         " must have floor(k/2) entries");
  }
}

int GTPattern::coordinate_index(int level, int j) const {
  int idx = 0;
  for (int l = 2; l < level; ++l) idx += l / 2;
  return idx + (j - 1);
}

std::string GTPattern::coordinate_name(int level, int j) {
  return "x" + std::to_string(level) + "_" + std::to_string(j);
}

GTPattern pattern_of_lambda(const GroupSpec& group, const WeylPoint& lambda) {
  if (!(lambda.group == group))
    throw InvalidInput("group mismatch between lambda and request");
  if (!in_closed_chamber(group.family, lambda.coords))
    throw InvalidInput("lambda must lie in the closed positive chamber");
  GTPattern p{group, lambda.coords, {}};
  for (int k = 2; k < group.matrix_size(); ++k) {
    std::vector<double> row(k / 2);
    for (int j = 0; j < k / 2; ++j) row[j] = lambda.coords[j];
    p.rows[k] = std::move(row);
  }
  return p;
}

namespace {

void check_ge(const GTPattern& p, double tol, int lhs_level, int lhs_j,
              int rhs_level, int rhs_j, bool rhs_abs,
              std::vector<PatternViolation>& out) {
  const double lhs = p.value_at(lhs_level, lhs_j);
  double rhs = p.value_at(rhs_level, rhs_j);
  if (rhs_abs) rhs = std::fabs(rhs);
  if (lhs >= rhs - tol) return;
  std::ostringstream msg;
  msg << "x" << lhs_level << "_" << lhs_j << " >= " << (rhs_abs ? "|" : "")
      << "x" << rhs_level << "_" << rhs_j << (rhs_abs ? "|" : "")
      << " fails: " << lhs << " < " << rhs;
  out.push_back({rhs_level, rhs_j, rhs - lhs, msg.str()});
}

}  // namespace

std::vector<PatternViolation> validate_pattern(const GTPattern& p,
                                               double tol) {
  p.check_shape();
  std::vector<PatternViolation> out;
  const int top = p.top_level();
  for (int m = 3; m <= top; ++m) {
    if (m % 2 == 0) {
      // x^{(2k)}_1 >= x^{(2k-1)}_1 >= x^{(2k)}_2 >= ... >= |x^{(2k)}_k|
      const int k = m / 2;
      for (int j = 1; j <= k - 1; ++j)
        check_ge(p, tol, m, j, m - 1, j, false, out);
      for (int j = 1; j <= k - 2; ++j)
        check_ge(p, tol, m - 1, j, m, j + 1, false, out);
      if (k >= 2) check_ge(p, tol, m - 1, k - 1, m, k, true, out);
    } else {
      // x^{(2k+1)}_1 >= x^{(2k)}_1 >= x^{(2k+1)}_2 >= ... >= |x^{(2k)}_k|
      const int k = (m - 1) / 2;
      for (int j = 1; j <= k - 1; ++j)
        check_ge(p, tol, m, j, m - 1, j, false, out);
      for (int j = 1; j <= k - 1; ++j)
        check_ge(p, tol, m - 1, j, m, j + 1, false, out);
      check_ge(p, tol, m, k, m - 1, k, true, out);
    }
  }
  return out;
}

std::string EdgeDescriptor::name() const {
  return std::string(kind == Kind::E ? "E" : "F") + "(" +
         std::to_string(level) + "," + std::to_string(j) + ")";
}

std::vector<EdgeShape> edge_shapes(const GroupSpec& group) {
  const int n = group.rank;
  std::vector<EdgeShape> out;
  const int e_max = group.family == Family::B ? n : n - 1;
  for (int k = 1; k <= e_max; ++k)
    for (int j = 1; j <= k; ++j)
      out.push_back({EdgeDescriptor::Kind::E, k, j, false});
  for (int k = 1; k <= n - 1; ++k)
    for (int j = 1; j <= k; ++j)
      out.push_back({EdgeDescriptor::Kind::F, k, j,
                     group.family == Family::D && k == n - 1 && j == n - 1});
  return out;
}

std::vector<EdgeDescriptor> enumerate_edges_at_lambda(
    const GroupSpec& group, const WeylPoint& lambda) {
  if (chamber_classify(lambda).kind != ChamberKind::regular)
    throw InvalidInput(
        "edge enumeration needs a regular lambda; use the eta-vertex path "
        "for non-regular orbits");
  const std::vector<double>& lv = lambda.coords;
  const int n = group.rank;
  const GTPattern ref = pattern_of_lambda(group, lambda);
  std::vector<EdgeDescriptor> out;
  for (const EdgeShape& s : edge_shapes(group)) {
    EdgeDescriptor e;
    e.kind = s.kind;
    e.level = s.kind == EdgeDescriptor::Kind::E ? 2 * s.k : 2 * s.k + 1;
    e.j = s.j;
    e.subset_of_edge = s.subset_of_edge;
    e.lattice_length = edge_length_t(group, s, lv);
    if (s.kind == EdgeDescriptor::Kind::E && s.j == s.k) {
      e.endpoint_high = lv[s.k - 1];
      e.endpoint_low = -lv[s.k - 1];
    } else if (s.subset_of_edge) {
      e.endpoint_high = lv[n - 2];
      e.endpoint_low = std::fabs(lv[n - 1]);
    } else {
      e.endpoint_high = lv[s.j - 1];
      e.endpoint_low = lv[s.j];
    }
    e.weight.assign(ref.coordinate_count(), 0);
    for (int l = 2 * s.j; l <= e.level; ++l)
      e.weight[ref.coordinate_index(l, s.j)] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

GTPattern edge_point(const EdgeDescriptor& e, const WeylPoint& lambda,
                     double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw InvalidInput("edge parameter t must lie in [0,1]");
  GTPattern p = pattern_of_lambda(lambda.group, lambda);
  if (e.level >= p.top_level() || e.j > e.level / 2)
    throw InvalidInput("edge does not belong to this pattern shape");
  const double value = e.endpoint_high - t * e.lattice_length;
  for (int l = 2 * e.j; l <= e.level; ++l) p.rows[l][e.j - 1] = value;
  return p;
}

}  // namespace orbitwidth
