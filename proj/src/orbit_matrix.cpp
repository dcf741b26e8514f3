#include "orbitwidth/orbit_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace orbitwidth {

namespace {

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

/// Pfaffian by expansion along the first active row.
double pf_expand(const Eigen::MatrixXd& a, std::vector<int> idx) {
  const size_t n = idx.size();
  if (n == 0) return 1.0;
  if (n == 2) return a(idx[0], idx[1]);
  double sum = 0.0;
  for (size_t p = 1; p < n; ++p) {
    const double factor = a(idx[0], idx[p]);
    if (factor == 0.0) continue;
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (size_t q = 1; q < n; ++q)
      if (q != p) rest.push_back(idx[q]);
    const double sgn = (p % 2 == 1) ? 1.0 : -1.0;
    sum += sgn * factor * pf_expand(a, std::move(rest));
  }
  return sum;
}

/// Pfaffian via Householder similarity to skew-tridiagonal form.
double pf_householder(Eigen::MatrixXd a) {
  const int m = static_cast<int>(a.rows());
  double det_q = 1.0;
  for (int k = 0; k + 2 < m; ++k) {
    Eigen::VectorXd x = a.col(k).segment(k + 1, m - k - 1);
    if (x.tail(m - k - 2).norm() == 0.0) continue;
    Eigen::VectorXd v = x;
    v(0) += sign_of(x(0)) * x.norm();
    const double vn = v.norm();
    if (vn == 0.0) continue;
    v /= vn;
    const Eigen::RowVectorXd wr = v.transpose() * a.middleRows(k + 1, m - k - 1);
    a.middleRows(k + 1, m - k - 1) -= 2.0 * v * wr;
    const Eigen::VectorXd wc = a.middleCols(k + 1, m - k - 1) * v;
    a.middleCols(k + 1, m - k - 1) -= 2.0 * wc * v.transpose();
    a = 0.5 * (a - a.transpose()).eval();
    det_q = -det_q;
  }
  double pf = det_q;
  for (int i = 0; i + 1 < m; i += 2) pf *= a(i, i + 1);
  return pf;
}

}  // namespace

SkewMatrix::SkewMatrix(const Eigen::MatrixXd& entries) : m_(entries) {
  if (m_.rows() != m_.cols()) throw InvalidInput("matrix must be square");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = i; j < m_.cols(); ++j)
      if (!(m_(i, j) == -m_(j, i)) || !std::isfinite(m_(i, j)))
        throw InvalidInput("matrix is not exactly skew-symmetric");
}

SkewMatrix SkewMatrix::project(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidInput("matrix must be square");
  return SkewMatrix(0.5 * (a - a.transpose()).eval());
}

SkewMatrix skew_block_diag(const std::vector<double>& values,
                           bool trailing_zero) {
  const int m = 2 * static_cast<int>(values.size()) + (trailing_zero ? 1 : 0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (size_t j = 0; j < values.size(); ++j) {
    a(2 * j, 2 * j + 1) = -values[j];
    a(2 * j + 1, 2 * j) = values[j];
  }
  return SkewMatrix(a);
}

SkewMatrix embed_lambda(const WeylPoint& lambda) {
  return skew_block_diag(lambda.coords, lambda.group.family == Family::B);
}

SkewMatrix principal_submatrix(const SkewMatrix& m, int k) {
  if (k < 1 || k > m.size())
    throw InvalidInput("submatrix size out of range");
  return SkewMatrix(m.mat().topLeftCorner(k, k).eval());
}

std::vector<double> char_poly(const Eigen::MatrixXd& a) {
  const int m = static_cast<int>(a.rows());
  std::vector<double> c(m + 1, 0.0);
  c[0] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Identity(m, m);
  for (int k = 1; k <= m; ++k) {
    const Eigen::MatrixXd am = a * mk;
    c[k] = -am.trace() / k;
    if (k < m) mk = am + c[k] * Eigen::MatrixXd::Identity(m, m);
  }
  return c;
}

std::vector<double> char_poly(const SkewMatrix& m) { return char_poly(m.mat()); }

double char_poly_residual(const std::vector<double>& p,
                          const std::vector<double>& q) {
  if (p.size() != q.size())
    throw InvalidInput("polynomial degrees differ");
  double scale = 1.0, diff = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    scale = std::max({scale, std::fabs(p[i]), std::fabs(q[i])});
    diff = std::max(diff, std::fabs(p[i] - q[i]));
  }
  return diff / scale;
}

double pfaffian(const SkewMatrix& m) {
  if (m.size() % 2 != 0)
    throw InvalidInput("pfaffian requires even matrix size");
  if (m.size() == 0) return 1.0;
  if (m.size() <= 8) {
    std::vector<int> idx(m.size());
    for (int i = 0; i < m.size(); ++i) idx[i] = i;
    return pf_expand(m.mat(), std::move(idx));
  }
  return pf_householder(m.mat());
}

ChamberSpectrum spectrum_to_chamber(const SkewMatrix& m) {
  const int n = m.size();
  const int k = n / 2;
  Eigen::MatrixXd s = -(m.mat() * m.mat());
  s = 0.5 * (s + s.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.info() != Eigen::Success)
    throw NumericError("eigen-solver failed on -M^2");
  Eigen::VectorXd d = es.eigenvalues().reverse();  // descending
  const double scale = 1.0 + std::max(std::fabs(d(0)), std::fabs(d(n - 1)));
  const double tol = 1e-8 * scale;
  ChamberSpectrum out{n, std::vector<double>(k, 0.0)};
  for (int j = 0; j < k; ++j) {
    const double e1 = d(2 * j), e2 = d(2 * j + 1);
    if (std::fabs(e1 - e2) > tol) {
      std::ostringstream msg;
      msg << "eigenvalue pairing failed at pair " << j + 1
          << ": residual " << std::fabs(e1 - e2) << " > " << tol;
      throw NumericError(msg.str());
    }
    out.values[j] = std::sqrt(std::max(0.0, 0.5 * (e1 + e2)));
  }
  if (n % 2 == 1 && std::fabs(d(n - 1)) > tol)
    throw NumericError("odd-size matrix lacks the expected zero eigenvalue");
  if (n % 2 == 0 && k >= 1 && out.values[k - 1] > 0.0) {
    // sign((-1)^k prod a_j) must equal sign(Pf); a_1..a_{k-1} >= 0.
    const double pf = pfaffian(m);
    if (pf != 0.0) {
      const double want = sign_of(pf) * (k % 2 == 0 ? 1.0 : -1.0);
      out.values[k - 1] *= want;
    }
  }
  return out;
}

GTPattern gt_map(const SkewMatrix& m, const GroupSpec& group) {
  if (m.size() != group.matrix_size())
    throw InvalidInput("matrix size does not match the group");
  GTPattern p{group, spectrum_to_chamber(m).values, {}};
  for (int k = 2; k < m.size(); ++k)
    p.rows[k] = spectrum_to_chamber(principal_submatrix(m, k)).values;
  return p;
}

Eigen::MatrixXd canonical_conjugator(const SkewMatrix& m,
                                     const std::vector<double>& target,
                                     double post_tol) {
  const int n = m.size();
  const int k = n / 2;
  if (static_cast<int>(target.size()) != k)
    throw InvalidInput("target chamber value count must be floor(size/2)");
  double tmax = 0.0;
  for (double t : target) tmax = std::max(tmax, std::fabs(t));
  const SkewMatrix canonical = skew_block_diag(target, n % 2 == 1);
  if (m.mat() == canonical.mat()) return Eigen::MatrixXd::Identity(n, n);

  Eigen::MatrixXd s = -(m.mat() * m.mat());
  s = 0.5 * (s + s.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.info() != Eigen::Success)
    throw NumericError("eigen-solver failed on -M^2");
  // Columns by descending eigenvalue, matching |target| descending.
  Eigen::MatrixXd cols(n, n);
  for (int i = 0; i < n; ++i) cols.col(i) = es.eigenvectors().col(n - 1 - i);

  const double group_tol = 1e-8 * (1.0 + tmax);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  int row = 0, used = 0, j = 0;
  while (j < k && std::fabs(target[j]) > group_tol) {
    int j2 = j + 1;
    while (j2 < k &&
           std::fabs(std::fabs(target[j2]) - std::fabs(target[j])) <= group_tol)
      ++j2;
    const int g = j2 - j;
    // Orthonormal basis of the 2g-dimensional eigenspace.
    std::vector<Eigen::VectorXd> basis;
    for (int c = 0; c < 2 * g; ++c) basis.push_back(cols.col(used + c));
    used += 2 * g;
    for (int p = 0; p < g; ++p) {
      Eigen::VectorXd u = basis.front();
      u.normalize();
      Eigen::VectorXd v = m.mat() * u / target[j + p];
      v -= v.dot(u) * u;
      const double vn = v.norm();
      if (vn < 0.5)
        throw NumericError("invariant 2-plane extraction failed");
      v /= vn;
      b.row(row++) = u.transpose();
      b.row(row++) = v.transpose();
      // Project the remaining basis off span{u, v} and re-orthonormalize.
      std::vector<Eigen::VectorXd> rest;
      for (size_t c = 1; c < basis.size(); ++c) {
        Eigen::VectorXd w = basis[c];
        w -= w.dot(u) * u + w.dot(v) * v;
        for (const Eigen::VectorXd& r : rest) w -= w.dot(r) * r;
        const double wn = w.norm();
        if (wn > 0.5 && static_cast<int>(rest.size()) < 2 * (g - p - 1)) {
          w /= wn;
          rest.push_back(w);
        }
      }
      if (static_cast<int>(rest.size()) != 2 * (g - p - 1))
        throw NumericError("eigenspace basis reduction failed");
      basis = std::move(rest);
    }
    j = j2;
  }
  // Remaining columns span the (near-)kernel; canonical blocks there vanish.
  const int kernel_rows = n - row;
  for (int c = 0; c < kernel_rows; ++c)
    b.row(row + c) = cols.col(used + c).transpose();

  if (b.determinant() < 0.0) {
    if (kernel_rows == 0)
      throw NumericError(
          "orientation mismatch: no kernel freedom to fix det(B)");
    b.row(n - 1) = -b.row(n - 1);
  }

  const double resid =
      (b * m.mat() * b.transpose() - canonical.mat()).cwiseAbs().maxCoeff();
  if (resid > post_tol * (1.0 + tmax)) {
    std::ostringstream msg;
    msg << "conjugation to canonical form missed tolerance: residual "
        << resid << " > " << post_tol * (1.0 + tmax);
    throw NumericError(msg.str());
  }
  return b;
}

SkewMatrix gt_torus_act(const SkewMatrix& m, const GroupSpec& group,
                        int level, const std::vector<double>& angles) {
  if (m.size() != group.matrix_size())
    throw InvalidInput("matrix size does not match the group");
  if (level < 2 || level > m.size())
    throw InvalidInput("level out of range");
  const int half = level / 2;
  if (static_cast<int>(angles.size()) != half)
    throw InvalidInput("angle count must be floor(level/2)");

  const SkewMatrix phi = principal_submatrix(m, level);
  const ChamberSpectrum sp = spectrum_to_chamber(phi);
  double amax = 0.0;
  for (double a : sp.values) amax = std::max(amax, std::fabs(a));
  const double tol = 1e-8 * (1.0 + amax);
  for (int i = 0; i + 1 < half; ++i)
    if (std::fabs(sp.values[i]) - std::fabs(sp.values[i + 1]) <= tol)
      throw InvalidInput(
          "level spectrum degenerate: repeated values leave the region U");
  if (std::fabs(sp.values[half - 1]) <= tol)
    throw InvalidInput(
        "level spectrum degenerate: zero value leaves the region U");

  bool all_zero = true;
  for (double a : angles) all_zero = all_zero && a == 0.0;
  if (all_zero) return m;  // the identity element acts exactly

  const Eigen::MatrixXd b = canonical_conjugator(phi, sp.values, 1e-9);
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(level, level);
  for (int i = 0; i < half; ++i) {
    const double c = std::cos(angles[i]), s = std::sin(angles[i]);
    t(2 * i, 2 * i) = c;
    t(2 * i, 2 * i + 1) = -s;
    t(2 * i + 1, 2 * i) = s;
    t(2 * i + 1, 2 * i + 1) = c;
  }
  Eigen::MatrixXd conj = Eigen::MatrixXd::Identity(m.size(), m.size());
  conj.topLeftCorner(level, level) = b.transpose() * t * b;
  return SkewMatrix::project(conj * m.mat() * conj.transpose());
}

}  // namespace orbitwidth
