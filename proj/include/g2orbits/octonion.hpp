#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "matrix.hpp"

namespace g2orbits {

/// Multiplication table of the imaginary units e_1..e_7.
///
/// Each line (i, j, k) is read cyclically: e_i e_j = e_k, e_j e_k = e_i and
/// e_k e_i = e_j; reversing a pair flips the sign. Every unordered pair of
/// distinct imaginary indices lies on exactly one line.
struct CayleyTable {
  using Line = std::array<int, 3>;

  static constexpr std::array<Line, 7> lines{{
      {1, 2, 3},
      {1, 4, 5},
      {1, 6, 7},
      {2, 6, 4},
      {2, 5, 7},
      {3, 4, 7},
      {3, 5, 6},
  }};

  // sign[i][j] and index[i][j] describe e_i e_j = sign * e_index.
  std::array<std::array<int, 8>, 8> sign{};
  std::array<std::array<int, 8>, 8> index{};

  static constexpr CayleyTable build(const std::array<Line, 7>& table_lines) {
    CayleyTable t;
    for (int i = 0; i < 8; ++i) {
      t.sign[0][i] = 1;
      t.index[0][i] = i;
      t.sign[i][0] = 1;
      t.index[i][0] = i;
    }
    for (int i = 1; i < 8; ++i) {
      t.sign[i][i] = -1;
      t.index[i][i] = 0;
    }
    for (const auto& l : table_lines) {
      for (int r = 0; r < 3; ++r) {
        const int a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
        t.sign[a][b] = 1;
        t.index[a][b] = c;
        t.sign[b][a] = -1;
        t.index[b][a] = c;
      }
    }
    return t;
  }
};

inline constexpr CayleyTable cayley = CayleyTable::build(CayleyTable::lines);

/// Element of the octonion algebra: coeffs[i] is the coefficient of e_i.
struct Octonion {
  Vec8 coeffs{};

  static constexpr Octonion basis(std::size_t i) {
    Octonion o;
    o.coeffs[i] = 1.0;
    return o;
  }
  static constexpr Octonion one() { return basis(0); }

  constexpr double operator[](std::size_t i) const { return coeffs[i]; }
  constexpr double& operator[](std::size_t i) { return coeffs[i]; }

  double real() const { return coeffs[0]; }
  bool is_imaginary() const { return coeffs[0] == 0.0; }

  Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  Octonion& operator*=(double s) {
    for (auto& c : coeffs) c *= s;
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) { return a *= -1.0; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend bool operator==(const Octonion&, const Octonion&) = default;
};

/// Bilinear product determined by the Cayley table.
inline Octonion oct_mul(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.coeffs[i] == 0.0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (b.coeffs[j] == 0.0) continue;
      r.coeffs[cayley.index[i][j]] += cayley.sign[i][j] * a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

inline Octonion operator*(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }

inline Octonion oct_conj(const Octonion& a) {
  Octonion r = a;
  for (std::size_t i = 1; i < 8; ++i) r.coeffs[i] = -r.coeffs[i];
  return r;
}

inline double oct_inner(const Octonion& a, const Octonion& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += a.coeffs[i] * b.coeffs[i];
  return s;
}

inline double norm_sq(const Octonion& a) { return oct_inner(a, a); }
inline double norm(const Octonion& a) { return std::sqrt(norm_sq(a)); }

inline double max_abs_diff(const Octonion& a, const Octonion& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
  return m;
}

/// Applies an endomorphism of O given as a matrix in the e-basis.
inline Octonion apply(const Mat8& m, const Octonion& x) { return Octonion{m * x.coeffs}; }

} // namespace g2orbits
