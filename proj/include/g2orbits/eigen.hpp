#pragma once

// Cyclic Jacobi for symmetric eigenproblems, multiplicity clustering, and a
// one-sided Jacobi SVD used for least-squares solves.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace g2orbits {

struct Eigenpair {
  double value;
  int multiplicity;

  friend bool operator==(const Eigenpair&, const Eigenpair&) = default;
};

using ClusteredSpectrum = std::vector<Eigenpair>;

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k pairs with values[k]
};

inline constexpr double kSymmetryTolerance = 1e-9;
inline constexpr double kDefaultClusterTolerance = 1e-6;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 (relative to the matrix norm once that exceeds 1).
inline SymmetricEigen jacobi_eigen(const DenseMatrix& s) {
  if (s.rows() != s.cols()) throw AsymmetricMatrix("jacobi_eigen: matrix is not square");
  if (s.asymmetry() > kSymmetryTolerance)
    throw AsymmetricMatrix("jacobi_eigen: asymmetry " + std::to_string(s.asymmetry()));

  const std::size_t n = s.rows();
  DenseMatrix a = s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (s(i, j) + s(j, i));
  DenseMatrix v = DenseMatrix::identity(n);

  const double scale = std::max(1.0, std::sqrt(a.frobenius_sq()));
  const double target = 1e-12 * scale;

  auto off_norm = [&] {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(off);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// Merges an ascending list: a value joins the current cluster when it lies
/// within tol of the previous value. Each cluster reports its mean.
inline ClusteredSpectrum cluster_sorted(const std::vector<double>& sorted, double tol) {
  ClusteredSpectrum out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted[i] - sorted[i - 1] > tol) {
      double sum = 0.0;
      for (std::size_t k = start; k < i; ++k) sum += sorted[k];
      if (i > start) out.push_back({sum / static_cast<double>(i - start), static_cast<int>(i - start)});
      start = i;
    }
  }
  return out;
}

inline ClusteredSpectrum sym_eigen(const DenseMatrix& s, double cluster_tol = kDefaultClusterTolerance) {
  return cluster_sorted(jacobi_eigen(s).values, cluster_tol);
}

/// Expands (value, multiplicity) pairs into an ascending list of values.
inline std::vector<double> expand(const ClusteredSpectrum& spectrum) {
  std::vector<double> v;
  for (const auto& e : spectrum) v.insert(v.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  std::sort(v.begin(), v.end());
  return v;
}

/// A = U diag(sigma) V^T for a tall (rows >= cols) matrix.
struct Svd {
  DenseMatrix u;               // rows x cols, orthonormal columns where sigma > 0
  std::vector<double> sigma;   // unsorted, paired with columns of u and v
  DenseMatrix v;               // cols x cols, orthogonal
};

/// One-sided (Hestenes) Jacobi SVD.
inline Svd jacobi_svd(const DenseMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  DenseMatrix u = a;
  DenseMatrix v = DenseMatrix::identity(n);
  // Pairs involving a numerically null column are left alone; otherwise
  // rounding noise in those columns keeps the sweep from terminating.
  const double floor = 1e-30 * a.frobenius_sq();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          alpha += u(k, p) * u(k, p);
          beta += u(k, q) * u(k, q);
          gamma += u(k, p) * u(k, q);
        }
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || std::abs(gamma) <= floor) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const double up = u(k, p), uq = u(k, q);
          u(k, p) = c * up - s * uq;
          u(k, q) = s * up + c * uq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vp = v(k, p), vq = v(k, q);
          v(k, p) = c * vp - s * vq;
          v(k, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  Svd out{DenseMatrix(m, n), std::vector<double>(n), v};
  for (std::size_t j = 0; j < n; ++j) {
    double nrm = 0.0;
    for (std::size_t k = 0; k < m; ++k) nrm += u(k, j) * u(k, j);
    nrm = std::sqrt(nrm);
    out.sigma[j] = nrm;
    if (nrm > 0.0)
      for (std::size_t k = 0; k < m; ++k) out.u(k, j) = u(k, j) / nrm;
  }
  return out;
}

/// Minimum-norm least-squares solution of A c = b, discarding singular values
/// below rel_tol * max sigma.
inline std::vector<double> least_squares(const Svd& svd, const std::vector<double>& b, double rel_tol = 1e-9) {
  const std::size_t m = svd.u.rows(), n = svd.v.rows();
  const double smax = svd.sigma.empty() ? 0.0 : *std::max_element(svd.sigma.begin(), svd.sigma.end());
  std::vector<double> c(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (svd.sigma[j] <= rel_tol * smax) continue;
    double proj = 0.0;
    for (std::size_t k = 0; k < m; ++k) proj += svd.u(k, j) * b[k];
    proj /= svd.sigma[j];
    for (std::size_t r = 0; r < n; ++r) c[r] += svd.v(r, j) * proj;
  }
  return c;
}

/// Right null-space directions (columns of V whose singular value is negligible).
inline std::vector<std::vector<double>> null_directions(const Svd& svd, double rel_tol = 1e-9) {
  const std::size_t n = svd.v.rows();
  const double smax = svd.sigma.empty() ? 0.0 : *std::max_element(svd.sigma.begin(), svd.sigma.end());
  std::vector<std::vector<double>> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (svd.sigma[j] > rel_tol * smax) continue;
    std::vector<double> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = svd.v(r, j);
    out.push_back(std::move(col));
  }
  return out;
}

} // namespace g2orbits
