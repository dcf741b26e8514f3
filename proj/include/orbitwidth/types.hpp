#ifndef ORBITWIDTH_TYPES_HPP
#define ORBITWIDTH_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitwidth {

/// Exact scalar used by the rational-arithmetic lane.
using Rational = boost::multiprecision::cpp_rational;

/// Invalid or out-of-domain input (maps to CLI exit code 1).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Requested data does not exist (violated interlacing, no bordering vector).
class NoSolution : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// Numeric failure: residual or pairing beyond tolerance (CLI exit code 2).
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Family { B, D };

inline char family_letter(Family f) { return f == Family::B ? 'B' : 'D'; }

/// Orthogonal group family and torus rank; matrix_size is 2n+1 (B) or 2n (D).
struct GroupSpec {
  Family family;
  int rank;

  GroupSpec(Family f, int n) : family(f), rank(n) {
    if (f == Family::B && n < 1)
      throw InvalidInput("B family requires rank >= 1");
    if (f == Family::D && n < 2)
      throw InvalidInput("D family requires rank >= 2");
  }

  int matrix_size() const {
    return family == Family::B ? 2 * rank + 1 : 2 * rank;
  }

  bool operator==(const GroupSpec& o) const {
    return family == o.family && rank == o.rank;
  }
};

/// A point of the (closed) positive Weyl chamber, lambda_1,...,lambda_n.
/// Chamber membership is not enforced here; operations check the
/// inequalities they actually require.
struct WeylPoint {
  GroupSpec group;
  std::vector<double> coords;

  WeylPoint(GroupSpec g, std::vector<double> c)
      : group(g), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != group.rank)
      throw InvalidInput("lambda length must equal the rank");
    for (double v : coords)
      if (!std::isfinite(v)) throw InvalidInput("lambda must be finite");
  }
};

/// Scalar-generic absolute value (double and Rational).
template <class T>
T abs_val(const T& x) {
  return x < T(0) ? T(-x) : x;
}
inline double abs_val(double x) { return std::fabs(x); }

/// Weak membership in the closed positive chamber:
/// B: lambda_1 >= ... >= lambda_n >= 0; D: lambda_1 >= ... >= lambda_{n-1} >= |lambda_n|.
template <class T>
bool in_closed_chamber(Family family, const std::vector<T>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (family == Family::B) {
    for (int i = 0; i + 1 < n; ++i)
      if (lambda[i] < lambda[i + 1]) return false;
    return !(lambda[n - 1] < T(0));
  }
  for (int i = 0; i + 2 < n; ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return !(lambda[n - 2] < abs_val(lambda[n - 1]));
}

}  // namespace orbitwidth

#endif
