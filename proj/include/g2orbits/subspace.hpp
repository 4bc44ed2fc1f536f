#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lie.hpp"

namespace g2orbits {

inline constexpr double kRankTolerance = 1e-9;

/// Orthonormal (under inner_g) family spanning a subspace of so(8).
struct Subspace {
  std::vector<LieMatrix> basis;

  std::size_t dim() const { return basis.size(); }
};

inline LieMatrix project(const Subspace& s, const LieMatrix& x) {
  LieMatrix p;
  for (const auto& b : s.basis) p += inner_g(x, b) * b;
  return p;
}

/// Norm of the component of x orthogonal to s.
inline double residual_norm(const Subspace& s, const LieMatrix& x) { return norm_g(x - project(s, x)); }

/// Gram-Schmidt with column pivoting: at every step the generator with the
/// largest remaining residual is taken next; generation stops once every
/// residual is below rel_tol times the largest generator norm.
inline Subspace orthonormalize(std::span<const LieMatrix> generators, double rel_tol = kRankTolerance) {
  Subspace out;
  if (generators.empty()) return out;
  std::vector<LieMatrix> work(generators.begin(), generators.end());
  double largest = 0.0;
  for (const auto& g : work) largest = std::max(largest, norm_g(g));
  if (largest == 0.0) return out;
  const double threshold = rel_tol * largest;

  std::vector<bool> used(work.size(), false);
  while (out.dim() < work.size()) {
    std::size_t best = work.size();
    double best_norm = threshold;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (used[i]) continue;
      const double n = norm_g(work[i]);
      if (n > best_norm) {
        best_norm = n;
        best = i;
      }
    }
    if (best == work.size()) break;
    used[best] = true;

    // Re-orthogonalize against the accepted basis once more before normalizing.
    LieMatrix v = work[best];
    v -= project(out, v);
    const double n = norm_g(v);
    if (n <= threshold) continue;
    v *= 1.0 / n;
    out.basis.push_back(v);
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!used[i]) work[i] -= inner_g(work[i], v) * v;
  }
  return out;
}

inline Subspace orthonormalize(const std::vector<LieMatrix>& generators, double rel_tol = kRankTolerance) {
  return orthonormalize(std::span<const LieMatrix>(generators), rel_tol);
}

/// Orthogonal complement of sub inside ambient.
inline Subspace complement(const Subspace& sub, const Subspace& ambient) {
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    const double r = residual_norm(ambient, sub.basis[i]);
    if (r > kRankTolerance)
      throw NotASubspace("basis vector " + std::to_string(i) + " leaves the ambient space (residual " +
                         std::to_string(r) + ")");
  }
  std::vector<LieMatrix> residuals;
  residuals.reserve(ambient.dim());
  for (const auto& a : ambient.basis) {
    LieMatrix r = a - project(sub, a);
    r -= project(sub, r);
    residuals.push_back(r);
  }
  Subspace c;
  const std::size_t want = ambient.dim() - sub.dim();
  if (want == 0) return c;
  // Ambient vectors have unit norm, so an absolute threshold matches the
  // relative one used elsewhere.
  Subspace raw = orthonormalize(residuals);
  for (auto& b : raw.basis) {
    b -= project(sub, b);
    b *= 1.0 / norm_g(b);
  }
  raw.basis.resize(std::min(raw.dim(), want));
  return raw;
}

/// Largest |<b_i, b_j> - delta_ij|.
inline double orthonormality_defect(const Subspace& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j)
      worst = std::max(worst, std::abs(inner_g(s.basis[i], s.basis[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

/// Largest residual of [b_i, b_j] off the span; zero for a subalgebra.
inline double closure_residual(const Subspace& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      worst = std::max(worst, residual_norm(s, bracket(s.basis[i], s.basis[j])));
  return worst;
}

} // namespace g2orbits
