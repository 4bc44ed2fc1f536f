#pragma once

// Triality automorphisms of so(8), the subalgebras used by the four actions,
// and the Spin(7) lifts of one-parameter subgroups.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "expm.hpp"
#include "lie.hpp"
#include "octonion.hpp"
#include "subspace.hpp"

namespace g2orbits {

namespace detail {

struct FRow {
  int i, j;
  std::array<SignedPair, 4> terms;  // 2 F_ij = sum of sign * G_ab
};

// clang-format off
inline constexpr std::array<FRow, 28> f_table{{
    {0, 1, {{{+1, 0, 1}, {+1, 2, 3}, {+1, 4, 5}, {+1, 6, 7}}}},
    {2, 3, {{{+1, 0, 1}, {+1, 2, 3}, {-1, 4, 5}, {-1, 6, 7}}}},
    {4, 5, {{{+1, 0, 1}, {-1, 2, 3}, {+1, 4, 5}, {-1, 6, 7}}}},
    {6, 7, {{{+1, 0, 1}, {-1, 2, 3}, {-1, 4, 5}, {+1, 6, 7}}}},
    {0, 2, {{{+1, 0, 2}, {-1, 1, 3}, {-1, 4, 6}, {+1, 5, 7}}}},
    {1, 3, {{{-1, 0, 2}, {+1, 1, 3}, {-1, 4, 6}, {+1, 5, 7}}}},
    {4, 6, {{{-1, 0, 2}, {-1, 1, 3}, {+1, 4, 6}, {+1, 5, 7}}}},
    {5, 7, {{{+1, 0, 2}, {+1, 1, 3}, {+1, 4, 6}, {+1, 5, 7}}}},
    {0, 3, {{{+1, 0, 3}, {+1, 1, 2}, {+1, 4, 7}, {+1, 5, 6}}}},
    {1, 2, {{{+1, 0, 3}, {+1, 1, 2}, {-1, 4, 7}, {-1, 5, 6}}}},
    {4, 7, {{{+1, 0, 3}, {-1, 1, 2}, {+1, 4, 7}, {-1, 5, 6}}}},
    {5, 6, {{{+1, 0, 3}, {-1, 1, 2}, {-1, 4, 7}, {+1, 5, 6}}}},
    {0, 4, {{{+1, 0, 4}, {-1, 1, 5}, {+1, 2, 6}, {-1, 3, 7}}}},
    {1, 5, {{{-1, 0, 4}, {+1, 1, 5}, {+1, 2, 6}, {-1, 3, 7}}}},
    {2, 6, {{{+1, 0, 4}, {+1, 1, 5}, {+1, 2, 6}, {+1, 3, 7}}}},
    {3, 7, {{{-1, 0, 4}, {-1, 1, 5}, {+1, 2, 6}, {+1, 3, 7}}}},
    {0, 5, {{{+1, 0, 5}, {+1, 1, 4}, {-1, 2, 7}, {-1, 3, 6}}}},
    {1, 4, {{{+1, 0, 5}, {+1, 1, 4}, {+1, 2, 7}, {+1, 3, 6}}}},
    {2, 7, {{{-1, 0, 5}, {+1, 1, 4}, {+1, 2, 7}, {-1, 3, 6}}}},
    {3, 6, {{{-1, 0, 5}, {+1, 1, 4}, {-1, 2, 7}, {+1, 3, 6}}}},
    {0, 6, {{{+1, 0, 6}, {-1, 1, 7}, {-1, 2, 4}, {+1, 3, 5}}}},
    {1, 7, {{{-1, 0, 6}, {+1, 1, 7}, {-1, 2, 4}, {+1, 3, 5}}}},
    {2, 4, {{{-1, 0, 6}, {-1, 1, 7}, {+1, 2, 4}, {+1, 3, 5}}}},
    {3, 5, {{{+1, 0, 6}, {+1, 1, 7}, {+1, 2, 4}, {+1, 3, 5}}}},
    {0, 7, {{{+1, 0, 7}, {+1, 1, 6}, {+1, 2, 5}, {+1, 3, 4}}}},
    {1, 6, {{{+1, 0, 7}, {+1, 1, 6}, {-1, 2, 5}, {-1, 3, 4}}}},
    {2, 5, {{{+1, 0, 7}, {-1, 1, 6}, {+1, 2, 5}, {-1, 3, 4}}}},
    {3, 4, {{{+1, 0, 7}, {-1, 1, 6}, {-1, 2, 5}, {+1, 3, 4}}}},
}};
// clang-format on

inline std::array<LieMatrix, 28> build_f_images() {
  std::array<LieMatrix, 28> images{};
  for (const auto& row : f_table) {
    LieMatrix f;
    for (const auto& term : row.terms) f += (0.5 * term.sign) * g_basis(term.i, term.j);
    for (std::size_t k = 0; k < 28; ++k)
      if (so8_pairs[k] == std::pair{row.i, row.j}) images[k] = f;
  }
  return images;
}

inline const std::array<LieMatrix, 28>& f_images() {
  static const std::array<LieMatrix, 28> images = build_f_images();
  return images;
}

} // namespace detail

/// F_ij as the tabulated half-integer combination of G's; F_ji = -F_ij.
inline LieMatrix f_basis(int i, int j) {
  if (i < 0 || i > 7 || j < 0 || j > 7 || i == j)
    throw InvalidIndex("f_basis(" + std::to_string(i) + ", " + std::to_string(j) + ")");
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (std::size_t k = 0; k < 28; ++k)
    if (so8_pairs[k] == std::pair{lo, hi}) return i < j ? detail::f_images()[k] : -detail::f_images()[k];
  throw InvalidIndex("f_basis: unreachable");
}

enum class TrialityMap { alpha, beta, gamma };

/// alpha(X)(a) = conj(X(conj a)); beta(G_ij) = F_ij extended linearly; gamma = beta o alpha.
inline LieMatrix apply_triality(TrialityMap map, const LieMatrix& x) {
  static const Mat8 conj = Mat8::diagonal({1, -1, -1, -1, -1, -1, -1, -1});
  auto alpha = [&](const LieMatrix& y) { return conj * y * conj; };
  auto beta = [](const LieMatrix& y) {
    const So8Coords c = to_coords(y);
    LieMatrix r;
    for (std::size_t k = 0; k < 28; ++k)
      if (c[k] != 0.0) r += c[k] * detail::f_images()[k];
    return r;
  };
  switch (map) {
  case TrialityMap::alpha: return alpha(x);
  case TrialityMap::beta: return beta(x);
  case TrialityMap::gamma: return beta(alpha(x));
  }
  return x;
}

inline LieMatrix triality_alpha(const LieMatrix& x) { return apply_triality(TrialityMap::alpha, x); }
inline LieMatrix triality_beta(const LieMatrix& x) { return apply_triality(TrialityMap::beta, x); }
inline LieMatrix triality_gamma(const LieMatrix& x) { return apply_triality(TrialityMap::gamma, x); }

/// sigma = diag(1, 1, 1, 1, -1, -1, -1, -1): fixes e_0..e_3, negates e_4..e_7.
inline Mat8 sigma_involution() { return Mat8::diagonal({1, 1, 1, 1, -1, -1, -1, -1}); }

enum class SubalgebraName { g2, su3, so4_g2, u3, so3_so4, so7 };

inline std::string_view to_string(SubalgebraName n) {
  switch (n) {
  case SubalgebraName::g2: return "g2";
  case SubalgebraName::su3: return "su3";
  case SubalgebraName::so4_g2: return "so4_g2";
  case SubalgebraName::u3: return "u3";
  case SubalgebraName::so3_so4: return "so3_so4";
  case SubalgebraName::so7: return "so7";
  }
  return "?";
}

inline SubalgebraName parse_subalgebra(std::string_view s) {
  for (auto n : {SubalgebraName::g2, SubalgebraName::su3, SubalgebraName::so4_g2, SubalgebraName::u3,
                 SubalgebraName::so3_so4, SubalgebraName::so7})
    if (to_string(n) == s) return n;
  throw UnknownSubalgebra("unknown subalgebra '" + std::string(s) + "'");
}

struct NamedSubalgebra {
  SubalgebraName name;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  const std::vector<LieMatrix>& basis() const { return space.basis; }
};

namespace detail {

inline std::vector<LieMatrix> g2_traceless(int axis) {
  return {v_elem(axis, 1, -1, 0), v_elem(axis, 0, 1, -1)};
}

inline NamedSubalgebra build_subalgebra(SubalgebraName name) {
  std::vector<LieMatrix> gens;
  switch (name) {
  case SubalgebraName::g2:
    for (int i = 1; i <= 7; ++i)
      for (auto& g : g2_traceless(i)) gens.push_back(g);
    break;
  case SubalgebraName::su3:
    gens = g2_traceless(1);
    for (int i = 2; i <= 7; ++i) gens.push_back(v_elem(i, 0, 1, -1));
    break;
  case SubalgebraName::so4_g2:
    for (int i = 1; i <= 3; ++i)
      for (auto& g : g2_traceless(i)) gens.push_back(g);
    break;
  case SubalgebraName::u3:
    gens = {v_elem(1, 1, 0, 0), v_elem(1, 0, 1, 0), v_elem(1, 0, 0, 1)};
    for (int i = 2; i <= 7; ++i) gens.push_back(v_elem(i, 0, 1, -1));
    break;
  case SubalgebraName::so3_so4:
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        if (j <= 3 || i >= 4) gens.push_back(g_basis(i, j));
    break;
  case SubalgebraName::so7:
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) gens.push_back(g_basis(i, j));
    break;
  }
  return {name, orthonormalize(gens)};
}

} // namespace detail

/// Orthonormal basis of the named subalgebra. Built once per process.
inline const NamedSubalgebra& named_subalgebra(SubalgebraName name) {
  static const std::array<NamedSubalgebra, 6> all = {
      detail::build_subalgebra(SubalgebraName::g2),     detail::build_subalgebra(SubalgebraName::su3),
      detail::build_subalgebra(SubalgebraName::so4_g2), detail::build_subalgebra(SubalgebraName::u3),
      detail::build_subalgebra(SubalgebraName::so3_so4), detail::build_subalgebra(SubalgebraName::so7),
  };
  return all[static_cast<std::size_t>(name)];
}

inline const NamedSubalgebra& named_subalgebra(std::string_view name) {
  return named_subalgebra(parse_subalgebra(name));
}

/// True iff g(e_i) g(e_j) = g(e_i e_j) for all basis pairs, within tol.
inline bool is_automorphism(const Mat8& g, double tol = 1e-10) {
  if (orthogonality_defect(g) > tol)
    throw NotOrthogonal("is_automorphism: orthogonality defect " + std::to_string(orthogonality_defect(g)));
  for (std::size_t i = 0; i < 8; ++i) {
    const Octonion gi = apply(g, Octonion::basis(i));
    for (std::size_t j = 0; j < 8; ++j) {
      const Octonion gj = apply(g, Octonion::basis(j));
      const Octonion lhs = gi * gj;
      const Octonion rhs = apply(g, Octonion::basis(i) * Octonion::basis(j));
      if (max_abs_diff(lhs, rhs) > tol) return false;
    }
  }
  return true;
}

/// Element (g1, g2, g2) of Spin(7): (g1 a)(g2 b) = g2(ab) for all octonions a, b.
struct SpinElement {
  Mat8 g1 = Mat8::identity();
  Mat8 g2 = Mat8::identity();

  static SpinElement identity() { return {}; }

  SpinElement inverse() const { return {g1.transpose(), g2.transpose()}; }

  friend SpinElement operator*(const SpinElement& a, const SpinElement& b) {
    return {a.g1 * b.g1, a.g2 * b.g2};
  }
};

/// max over the given pairs of |(g1 a)(g2 b) - g2(ab)|.
inline double spin_relation_defect(const SpinElement& p, std::span<const std::pair<Octonion, Octonion>> pairs) {
  double worst = 0.0;
  for (const auto& [a, b] : pairs) {
    const Octonion lhs = apply(p.g1, a) * apply(p.g2, b);
    const Octonion rhs = apply(p.g2, a * b);
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

inline constexpr double kSo7MembershipTolerance = 1e-10;

/// Lift of exp(tX), X in so(7), to Spin(7): (exp tX, exp t gamma(X)).
inline SpinElement spin_lift_exp(const LieMatrix& x, double t) {
  const double defect = max_abs_diff(triality_alpha(x), x);
  if (defect > kSo7MembershipTolerance)
    throw NotInSo7("spin_lift_exp: alpha(X) != X (defect " + std::to_string(defect) + ")");
  return {expm(x, t), expm(triality_gamma(x), t)};
}

/// |(chi'(p) e_0, e_0)|: the length of the projection of e_0 onto the line
/// chi(p)[e_0] in RP^7.
inline double rp7_invariant(const SpinElement& p) { return std::abs(p.g2(0, 0)); }

} // namespace g2orbits
