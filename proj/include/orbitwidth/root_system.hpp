#ifndef ORBITWIDTH_ROOT_SYSTEM_HPP
#define ORBITWIDTH_ROOT_SYSTEM_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitwidth/types.hpp"

namespace orbitwidth {

/// A positive coroot of B_n or D_n. Pairings with lambda are the exact
/// linear forms 2*lambda_j (short_e), lambda_j - lambda_k (long_diff),
/// lambda_j + lambda_k (long_sum).
struct Coroot {
  enum class Kind { short_e, long_diff, long_sum };
  Kind kind;
  int j;  // 1-based
  int k;  // 1-based second index; 0 for short_e
  std::vector<int> pairing_coeffs;

  std::string name() const;  // "e2", "e1-e2", "e1+e2"
};

/// Positive coroots in a fixed enumeration order: e_1,...,e_n (B only),
/// then for each pair j<k in lexicographic order the sum coroot followed
/// by the difference coroot. For (B,2) this reproduces the order whose
/// pairings at (6,1) read 12, 2, 7, 5.
std::vector<Coroot> positive_coroots(const GroupSpec& group);

/// Pairing values aligned with positive_coroots(group); exact linear forms.
template <class T>
std::vector<T> coroot_pairing_values(const GroupSpec& group,
                                     const std::vector<T>& lambda) {
  if (static_cast<int>(lambda.size()) != group.rank)
    throw InvalidInput("lambda length must equal the rank");
  std::vector<T> out;
  for (const Coroot& c : positive_coroots(group)) {
    T v(0);
    for (int i = 0; i < group.rank; ++i)
      if (c.pairing_coeffs[i] != 0) v += T(c.pairing_coeffs[i]) * lambda[i];
    out.push_back(v);
  }
  return out;
}

/// One (coroot, pairing) entry per positive coroot.
std::vector<std::pair<Coroot, double>> coroot_pairings(
    const GroupSpec& group, const WeylPoint& lambda);

/// Minimum |pairing| over all positive coroots, or minimum over strictly
/// positive pairings when positive_only is set. Throws when every pairing
/// vanishes (lambda = 0).
template <class T>
T min_coroot_pairing_t(const GroupSpec& group, const std::vector<T>& lambda,
                       bool positive_only) {
  bool found = false;
  T best(0);
  for (T v : coroot_pairing_values(group, lambda)) {
    if (positive_only) {
      if (!(v > T(0))) continue;
    } else {
      v = abs_val(v);
    }
    if (!found || v < best) {
      best = v;
      found = true;
    }
  }
  if (!found || (!positive_only && best == T(0)))
    throw InvalidInput("degenerate input: no nonzero coroot pairing");
  return best;
}

double min_coroot_pairing(const GroupSpec& group, const WeylPoint& lambda,
                          bool positive_only = false);

enum class ChamberKind { regular, nonregular_single_block, outside_scope };

/// Classification result; s and l (1-based start and length of the equal
/// run) are meaningful only for nonregular_single_block.
struct ChamberClass {
  ChamberKind kind;
  int s = 0;
  int l = 0;
};

/// Total classification of a chamber point. Equalities are detected with
/// slack eps (default 0: exact comparison).
ChamberClass chamber_classify(const WeylPoint& lambda, double eps = 0.0);

/// Exact-scalar classification used by the rational lane (no slack).
template <class T>
ChamberClass chamber_classify_t(Family family, const std::vector<T>& lambda) {
  const int n = static_cast<int>(lambda.size());
  ChamberClass out{ChamberKind::outside_scope, 0, 0};
  for (int i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) return out;
  if (family == Family::B) {
    if (!(lambda[n - 1] > T(0))) return out;
  } else {
    if (!(lambda[n - 2] > abs_val(lambda[n - 1]))) return out;
  }
  // Count equal runs among positions 1..n (B) / 1..n-1 (D); for D the
  // chamber condition above already keeps position n out of any run.
  const int last = family == Family::B ? n : n - 1;
  int runs = 0, s = 0, l = 0;
  for (int i = 0; i + 1 < last; ++i) {
    if (lambda[i] == lambda[i + 1]) {
      if (l == 0) {
        s = i + 1;
        l = 2;
        ++runs;
      } else {
        ++l;
      }
    } else if (l > 0) {
      if (runs == 1 && out.s == 0) {
        out.s = s;
        out.l = l;
      }
      l = 0;
    }
  }
  if (l > 0 && runs == 1 && out.s == 0) {
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

#endif
