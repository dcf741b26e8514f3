#include "orbitwidth/root_system.hpp"

#include <cmath>

namespace orbitwidth {

std::string Coroot::name() const {
  switch (kind) {
    case Kind::short_e:
      return "e" + std::to_string(j);
    case Kind::long_diff:
      return "e" + std::to_string(j) + "-e" + std::to_string(k);
    case Kind::long_sum:
      return "e" + std::to_string(j) + "+e" + std::to_string(k);
  }
  return {};
}

std::vector<Coroot> positive_coroots(const GroupSpec& group) {
  const int n = group.rank;
  std::vector<Coroot> out;
  auto coeffs = [n](int j, int cj, int k, int ck) {
    std::vector<int> c(n, 0);
    c[j - 1] = cj;
    if (k > 0) c[k - 1] = ck;
    return c;
  };
  if (group.family == Family::B)
    for (int j = 1; j <= n; ++j)
      out.push_back({Coroot::Kind::short_e, j, 0, coeffs(j, 2, 0, 0)});
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      out.push_back({Coroot::Kind::long_sum, j, k, coeffs(j, 1, k, 1)});
      out.push_back({Coroot::Kind::long_diff, j, k, coeffs(j, 1, k, -1)});
    }
  return out;
}

std::vector<std::pair<Coroot, double>> coroot_pairings(
    const GroupSpec& group, const WeylPoint& lambda) {
  if (!(lambda.group == group))
    throw InvalidInput("group mismatch between lambda and request");
  std::vector<std::pair<Coroot, double>> out;
  auto coroots = positive_coroots(group);
  auto values = coroot_pairing_values(group, lambda.coords);
  for (size_t i = 0; i < coroots.size(); ++i)
    out.emplace_back(coroots[i], values[i]);
  return out;
}

double min_coroot_pairing(const GroupSpec& group, const WeylPoint& lambda,
                          bool positive_only) {
  if (!in_closed_chamber(group.family, lambda.coords))
    throw InvalidInput("lambda must lie in the closed positive chamber");
  return min_coroot_pairing_t(group, lambda.coords, positive_only);
}

ChamberClass chamber_classify(const WeylPoint& lambda, double eps) {
  const Family family = lambda.group.family;
  const std::vector<double>& v = lambda.coords;
  const int n = static_cast<int>(v.size());
  auto equal = [eps](double a, double b) { return std::fabs(a - b) <= eps; };
  ChamberClass out{ChamberKind::outside_scope, 0, 0};
  for (int i = 0; i + 1 < n; ++i)
    if (v[i] < v[i + 1] - eps) return out;  // unsorted beyond slack
  if (family == Family::B) {
    if (!(v[n - 1] > eps)) return out;  // zeros (or negatives) in B
  } else {
    if (!(v[n - 2] > std::fabs(v[n - 1]) + eps)) return out;
  }
  const int last = family == Family::B ? n : n - 1;
  int runs = 0, s = 0, l = 0;
  for (int i = 0; i + 1 < last; ++i) {
    if (equal(v[i], v[i + 1])) {
      if (l == 0) {
        s = i + 1;
        l = 2;
        ++runs;
      } else {
        ++l;
      }
    } else if (l > 0) {
      if (runs == 1) {
        out.s = s;
        out.l = l;
      }
      l = 0;
    }
  }
  if (l > 0 && runs == 1) {
    out.s = s;
    out.l = l;
  }
  if (runs == 0) {
    out.kind = ChamberKind::regular;
  } else if (runs == 1) {
    out.kind = ChamberKind::nonregular_single_block;
  } else {
    out.s = out.l = 0;
  }
  return out;
}

}  // namespace orbitwidth
