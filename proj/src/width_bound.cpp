#include "orbitwidth/width_bound.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace orbitwidth {

int RootVector::dot(const RootVector& o) const {
  if (coeffs.size() != o.coeffs.size())
    throw InvalidInput("root vectors live in different ranks");
  int s = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * o.coeffs[i];
  return s;
}

int RootVector::norm_sq() const { return dot(*this); }

std::string RootVector::name() const {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (coeffs[i] > 0 && !out.empty())
      out += "+";
    else if (coeffs[i] < 0)
      out += "-";
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

RootVector parse_root(const std::string& text, int rank) {
  static const std::regex grammar(
      R"(^\s*e([0-9]+)\s*(?:([+-])\s*e([0-9]+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar))
    throw InvalidInput("cannot parse root '" + text +
                       "': expected e<j>, e<j>+e<k> or e<j>-e<k>");
  RootVector v;
  v.coeffs.assign(rank, 0);
  const int j = std::stoi(m[1].str());
  if (j < 1 || j > rank)
    throw InvalidInput("root index out of range in '" + text + "'");
  v.coeffs[j - 1] += 1;
  if (m[2].matched) {
    const int k = std::stoi(m[3].str());
    if (k < 1 || k > rank)
      throw InvalidInput("root index out of range in '" + text + "'");
    if (k == j)
      throw InvalidInput("root '" + text + "' repeats an index");
    v.coeffs[k - 1] += m[2].str() == "+" ? 1 : -1;
  }
  return v;
}

BoundReport gromov_width_lower_bound(const GroupSpec& group,
                                     const WeylPoint& lambda) {
  const ChamberClass cls = chamber_classify(lambda);
  if (cls.kind == ChamberKind::nonregular_single_block)
    throw InvalidInput(
        "lambda is non-regular (one equal block): use nonregular_bound");
  if (cls.kind == ChamberKind::outside_scope)
    throw InvalidInput("lambda is outside the supported chamber region");

  const auto edges = enumerate_edges_at_lambda(group, lambda);
  size_t best_edge = 0;
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].lattice_length < edges[best_edge].lattice_length)
      best_edge = i;

  const auto pairings = coroot_pairings(group, lambda);
  size_t best_coroot = 0;
  for (size_t i = 1; i < pairings.size(); ++i)
    if (pairings[i].second < pairings[best_coroot].second) best_coroot = i;

  // Two independent computations of the same value; the linear forms are
  // evaluated identically, so agreement is exact.
  if (edges[best_edge].lattice_length != pairings[best_coroot].second) {
    std::ostringstream msg;
    msg << "edge route (" << edges[best_edge].lattice_length
        << ") and coroot route (" << pairings[best_coroot].second
        << ") disagree";
    throw NumericError(msg.str());
  }

  const int half_dim = group.family == Family::B
                           ? group.rank * group.rank
                           : group.rank * (group.rank - 1);
  return BoundReport{group,
                     lambda.coords,
                     pairings[best_coroot].second,
                     pairings[best_coroot].first,
                     edges[best_edge],
                     BoundMode::regular,
                     pattern_of_lambda(group, lambda),
                     {},
                     pairings[best_coroot].second,
                     2 * half_dim};
}

EtaVertex eta_vertex(const GroupSpec& group, const WeylPoint& lambda) {
  const ChamberClass cls = chamber_classify(lambda);
  if (cls.kind == ChamberKind::outside_scope)
    throw InvalidInput("lambda is outside the supported chamber region");
  if (cls.kind == ChamberKind::regular) {
    SkewMatrix m = embed_lambda(lambda);
    GTPattern p = gt_map(m, group);
    return EtaVertex{lambda.coords, std::move(m), std::move(p), true};
  }
  const int n = group.rank;
  std::vector<double> eta;
  eta.reserve(n);
  for (int i = 1; i <= cls.s; ++i) eta.push_back(lambda.coords[i - 1]);
  for (int i = cls.s + cls.l; i <= n; ++i) eta.push_back(lambda.coords[i - 1]);
  for (int r = 0; r < cls.l - 1; ++r) eta.push_back(lambda.coords[cls.s - 1]);
  SkewMatrix m = skew_block_diag(eta, group.family == Family::B);
  GTPattern p = gt_map(m, group);
  return EtaVertex{std::move(eta), std::move(m), std::move(p), false};
}

BoundReport nonregular_bound(const GroupSpec& group, const WeylPoint& lambda) {
  const ChamberClass cls = chamber_classify(lambda);
  if (cls.kind == ChamberKind::regular)
    throw InvalidInput("lambda is regular: use gromov_width_lower_bound");
  if (cls.kind == ChamberKind::outside_scope)
    throw InvalidInput("lambda is outside the supported chamber region");

  const int n = group.rank;
  const std::vector<double>& lv = lambda.coords;
  const double bound = nonregular_bound_t(group, lv);

  const auto pairings = coroot_pairings(group, lambda);
  size_t best = pairings.size();
  for (size_t i = 0; i < pairings.size(); ++i) {
    if (!(pairings[i].second > 0.0)) continue;
    if (best == pairings.size() || pairings[i].second < pairings[best].second)
      best = i;
  }
  if (best == pairings.size())
    throw InvalidInput("degenerate input: no strictly positive coroot pairing");

  // Edge lengths at the eta vertex: gaps between consecutive kept values
  // (the repeated block contributes lambda_s - lambda_{s+l}) plus the
  // doubled values, with |lambda_n| in the D family.
  std::vector<double> lengths;
  std::vector<int> kept;
  for (int i = 1; i <= cls.s; ++i) kept.push_back(i);
  for (int i = cls.s + cls.l; i <= n; ++i) kept.push_back(i);
  auto kept_value = [&](int pos) {
    const double v = lv[pos - 1];
    return group.family == Family::D && pos == n ? std::fabs(v) : v;
  };
  for (size_t i = 0; i + 1 < kept.size(); ++i)
    lengths.push_back(kept_value(kept[i]) - kept_value(kept[i + 1]));
  for (int i = 1; i <= n; ++i) lengths.push_back(2.0 * kept_value(i));

  double edge_min = lengths.empty() ? 0.0 : lengths.front();
  for (double v : lengths) edge_min = std::min(edge_min, v);
  if (edge_min != bound) {
    std::ostringstream msg;
    msg << "eta-vertex edge minimum (" << edge_min
        << ") and coroot formula (" << bound << ") disagree";
    throw NumericError(msg.str());
  }

  EtaVertex eta = eta_vertex(group, lambda);
  // The equal block freezes l(l-1)/2 pattern coordinates, shrinking the
  // orbit from the regular dimension by l(l-1).
  const int half_dim = (group.family == Family::B
                            ? group.rank * group.rank
                            : group.rank * (group.rank - 1)) -
                       cls.l * (cls.l - 1) / 2;
  return BoundReport{group,
                     lv,
                     bound,
                     pairings[best].first,
                     std::nullopt,
                     group.family == Family::B ? BoundMode::nonregular_B
                                               : BoundMode::nonregular_D,
                     std::move(eta.pattern),
                     std::move(lengths),
                     bound,
                     2 * half_dim};
}

CenteredComparison standard_torus_comparison(const GroupSpec& group,
                                             const WeylPoint& p,
                                             const RootVector& alpha,
                                             const RootVector& beta) {
  if (static_cast<int>(alpha.coeffs.size()) != group.rank ||
      static_cast<int>(beta.coeffs.size()) != group.rank)
    throw InvalidInput("root coefficient length must equal the rank");
  if (chamber_classify(p).kind != ChamberKind::regular)
    throw InvalidInput("comparison point p must be regular");
  if (alpha.norm_sq() <= beta.norm_sq())
    throw InvalidInput(
        "comparison needs ||alpha|| > ||beta|| (different root lengths)");

  auto pair_with_p = [&](const RootVector& r) {
    double s = 0.0;
    for (int i = 0; i < group.rank; ++i) s += r.coeffs[i] * p.coords[i];
    return s;
  };
  const double beta_p = pair_with_p(beta);
  const double coroot_bound = 2.0 * beta_p / beta.norm_sq();
  if (!(coroot_bound > 0.0))
    throw InvalidInput("beta must pair positively with p");

  CenteredComparison out{p.coords, alpha, beta, 0.0, coroot_bound,
                         ComparisonConclusion::no_intersection};
  const int ba = beta.dot(alpha);
  if (ba == 0) return out;
  out.t_cut = std::fabs(beta_p / ba);
  out.conclusion = ComparisonConclusion::standard_weaker;
  if (!(out.t_cut < coroot_bound))
    throw NumericError(
        "centered-region cut is not below the coroot bound; the strict "
        "inequality of the comparison failed");
  return out;
}

}  // namespace orbitwidth
