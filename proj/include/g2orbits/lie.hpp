#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "errors.hpp"
#include "matrix.hpp"

namespace g2orbits {

/// Elements of so(8) are skew-symmetric 8x8 matrices acting on the e-basis.
using LieMatrix = Mat8;

/// G_ij: e_i -> e_j, e_j -> -e_i, every other basis vector -> 0.
inline LieMatrix g_basis(int i, int j) {
  if (i < 0 || i > 7 || j < 0 || j > 7 || i == j)
    throw InvalidIndex("g_basis(" + std::to_string(i) + ", " + std::to_string(j) + ")");
  LieMatrix g;
  g(j, i) = 1.0;
  g(i, j) = -1.0;
  return g;
}

/// The 28 index pairs (i < j) in lexicographic order; coordinate k of an so(8)
/// element refers to so8_pairs[k].
inline constexpr std::array<std::pair<int, int>, 28> so8_pairs = [] {
  std::array<std::pair<int, int>, 28> p{};
  std::size_t k = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) p[k++] = {i, j};
  return p;
}();

using So8Coords = std::array<double, 28>;

/// Coordinates in the G_ij basis. The basis is orthonormal for inner_g, so
/// these are also orthonormal coordinates. Only the lower triangle is read.
inline So8Coords to_coords(const LieMatrix& x) {
  So8Coords c{};
  for (std::size_t k = 0; k < 28; ++k) {
    const auto [i, j] = so8_pairs[k];
    c[k] = x(j, i);
  }
  return c;
}

inline LieMatrix from_coords(const So8Coords& c) {
  LieMatrix x;
  for (std::size_t k = 0; k < 28; ++k) {
    const auto [i, j] = so8_pairs[k];
    x(j, i) = c[k];
    x(i, j) = -c[k];
  }
  return x;
}

inline double skew_defect(const LieMatrix& x) { return (x + x.transpose()).max_abs(); }

inline LieMatrix bracket(const LieMatrix& x, const LieMatrix& y) { return x * y - y * x; }

/// Invariant inner product -1/2 tr(XY); agrees with -B/8 on g2 and -B/10 on so(7).
inline double inner_g(const LieMatrix& x, const LieMatrix& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 8; ++k) s += x(i, k) * y(k, i);
  return -0.5 * s;
}

inline double norm_g(const LieMatrix& x) { return std::sqrt(inner_g(x, x)); }

/// Element V_axis(lambda, mu, nu) of the maximal abelian subspace V_axis.
struct VElement {
  int axis = 1;
  double lambda = 0.0;
  double mu = 0.0;
  double nu = 0.0;
};

namespace detail {

struct SignedPair {
  int sign;
  int i;
  int j;
};

// Row a-1 lists the three signed G_ij that lambda, mu, nu multiply in V_a.
inline constexpr std::array<std::array<SignedPair, 3>, 7> v_table{{
    {{{+1, 2, 3}, {+1, 4, 5}, {+1, 6, 7}}},
    {{{-1, 1, 3}, {-1, 4, 6}, {+1, 5, 7}}},
    {{{+1, 1, 2}, {+1, 4, 7}, {+1, 5, 6}}},
    {{{-1, 1, 5}, {+1, 2, 6}, {-1, 3, 7}}},
    {{{+1, 1, 4}, {-1, 2, 7}, {-1, 3, 6}}},
    {{{-1, 1, 7}, {-1, 2, 4}, {+1, 3, 5}}},
    {{{+1, 1, 6}, {+1, 2, 5}, {+1, 3, 4}}},
}};

} // namespace detail

inline LieMatrix v_elem(const VElement& v) {
  if (v.axis < 1 || v.axis > 7) throw InvalidIndex("V axis " + std::to_string(v.axis));
  const auto& row = detail::v_table[v.axis - 1];
  const double c[3] = {v.lambda, v.mu, v.nu};
  LieMatrix x;
  for (int r = 0; r < 3; ++r) x += (row[r].sign * c[r]) * g_basis(row[r].i, row[r].j);
  return x;
}

inline LieMatrix v_elem(int axis, double lambda, double mu, double nu) {
  return v_elem(VElement{axis, lambda, mu, nu});
}

/// zeta_i = V_i(1, 1, 1)
inline LieMatrix zeta(int axis) { return v_elem(axis, 1.0, 1.0, 1.0); }

/// Recovers (lambda, mu, nu) from an element known to lie in V_axis.
inline VElement v_coeffs(int axis, const LieMatrix& x) {
  if (axis < 1 || axis > 7) throw InvalidIndex("V axis " + std::to_string(axis));
  const auto& row = detail::v_table[axis - 1];
  double c[3];
  for (int r = 0; r < 3; ++r) c[r] = row[r].sign * x(row[r].j, row[r].i);
  return {axis, c[0], c[1], c[2]};
}

} // namespace g2orbits
