#pragma once

// Invariant suites behind `verify-algebra`: octonion table contract,
// bracket identities among the V_i, triality maps, and subalgebras.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eigen.hpp"
#include "lie.hpp"
#include "octonion.hpp"
#include "subspace.hpp"
#include "triality.hpp"

namespace g2orbits {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed;
  std::string detail;
};

using Triple = std::array<double, 3>;

/// [V_i(a), V_j(b)] = V_k(rhs(a, b)), with exact integer coefficients.
struct BracketIdentity {
  int i;
  int j;
  int k;
  Triple (*rhs)(const Triple& a, const Triple& b);
};

// clang-format off
inline constexpr std::array<BracketIdentity, 9> kBracketIdentities{{
  {1, 4, 5, [](const Triple& a, const Triple& b) -> Triple {
     return {a[1] * b[0], -(a[0] * b[2] + a[2] * b[1]), -(a[0] * b[1] + a[2] * b[2])}; }},
  {1, 5, 4, [](const Triple& a, const Triple& b) -> Triple {
     return {-a[1] * b[0], a[0] * b[2] + a[2] * b[1], a[0] * b[1] + a[2] * b[2]}; }},
  {4, 5, 1, [](const Triple& a, const Triple& b) -> Triple {
     return {-(a[1] * b[2] + a[2] * b[1]), a[0] * b[0], -(a[1] * b[1] + a[2] * b[2])}; }},
  {2, 4, 6, [](const Triple& a, const Triple& b) -> Triple {
     return {a[0] * b[2] + a[2] * b[0], -a[1] * b[1], a[0] * b[0] + a[2] * b[2]}; }},
  {2, 6, 4, [](const Triple& a, const Triple& b) -> Triple {
     return {-(a[0] * b[2] + a[2] * b[0]), a[1] * b[1], -(a[0] * b[0] + a[2] * b[2])}; }},
  {4, 6, 2, [](const Triple& a, const Triple& b) -> Triple {
     return {a[0] * b[2] + a[2] * b[0], -a[1] * b[1], a[0] * b[0] + a[2] * b[2]}; }},
  {3, 4, 7, [](const Triple& a, const Triple& b) -> Triple {
     return {-(a[0] * b[1] + a[2] * b[0]), -(a[0] * b[0] + a[2] * b[1]), a[1] * b[2]}; }},
  {3, 7, 4, [](const Triple& a, const Triple& b) -> Triple {
     return {a[0] * b[1] + a[2] * b[0], a[0] * b[0] + a[2] * b[1], -a[1] * b[2]}; }},
  {4, 7, 3, [](const Triple& a, const Triple& b) -> Triple {
     return {-(a[0] * b[1] + a[1] * b[0]), a[2] * b[2], -(a[0] * b[0] + a[1] * b[1])}; }},
}};
// clang-format on

/// Brackets with zeta_i against a traceless V_j, landing on a multiple of
/// zeta_4. zeta_first says which slot holds zeta; component picks the factor
/// from the traceless triple.
struct ZetaIdentity {
  int zeta_axis;
  int v_axis;
  bool zeta_first;
  int component;  // 0 = lambda, 1 = mu, 2 = nu
  int sign;
};

inline constexpr std::array<ZetaIdentity, 6> kZetaIdentities{{
    {1, 5, true, 0, -1},
    {5, 1, false, 1, -1},
    {2, 6, true, 1, +1},
    {6, 2, false, 1, +1},
    {3, 7, true, 2, -1},
    {7, 3, false, 1, -1},
}};

namespace detail {

inline std::vector<Triple> integer_grid() {
  std::vector<Triple> g;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) g.push_back({double(a), double(b), double(c)});
  return g;
}

inline LieMatrix v_of(int axis, const Triple& c) { return v_elem(axis, c[0], c[1], c[2]); }

inline LieMatrix random_so8(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  So8Coords c;
  for (auto& x : c) x = u(rng);
  return from_coords(c);
}

inline LieMatrix random_so7(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LieMatrix x;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) x += u(rng) * g_basis(i, j);
  return x;
}

inline Octonion random_octonion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Octonion o;
  for (auto& c : o.coeffs) c = u(rng);
  return o;
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

/// 28x28 matrix of a linear map on so(8) in G coordinates, minus the identity.
inline DenseMatrix map_minus_identity(const std::function<LieMatrix(const LieMatrix&)>& f) {
  DenseMatrix m(28, 28);
  for (std::size_t c = 0; c < 28; ++c) {
    So8Coords e{};
    e[c] = 1.0;
    const So8Coords img = to_coords(f(from_coords(e)));
    for (std::size_t r = 0; r < 28; ++r) m(r, c) = img[r] - (r == c ? 1.0 : 0.0);
  }
  return m;
}

} // namespace detail

inline constexpr std::uint64_t kCheckSeed = 0x6f63746f6e696f6eULL;

inline std::vector<CheckResult> octonion_checks() {
  std::vector<CheckResult> out;
  const std::string group = "octonion";

  // Every unordered imaginary pair on exactly one line.
  {
    std::array<std::array<int, 8>, 8> hits{};
    for (const auto& l : CayleyTable::lines)
      for (int r = 0; r < 3; ++r) {
        const int a = l[r], b = l[(r + 1) % 3];
        ++hits[std::min(a, b)][std::max(a, b)];
      }
    int bad = 0;
    for (int i = 1; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) bad += hits[i][j] != 1;
    out.push_back({group, "lines partition the 21 imaginary pairs", bad == 0, std::to_string(bad) + " bad pairs"});
  }

  // All 64 basis products against the contract.
  {
    int bad = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        const Octonion p = Octonion::basis(i) * Octonion::basis(j);
        Octonion expect;
        if (i == 0) expect = Octonion::basis(j);
        else if (j == 0) expect = Octonion::basis(i);
        else if (i == j) expect = -Octonion::one();
        else {
          const Octonion q = Octonion::basis(j) * Octonion::basis(i);
          if (!(p == -q)) ++bad;
          expect = p;
        }
        if (!(p == expect)) ++bad;
      }
    for (const auto& l : CayleyTable::lines)
      for (int r = 0; r < 3; ++r) {
        const Octonion p = Octonion::basis(l[r]) * Octonion::basis(l[(r + 1) % 3]);
        if (!(p == Octonion::basis(l[(r + 2) % 3]))) ++bad;
      }
    out.push_back({group, "64 basis products", bad == 0, std::to_string(bad) + " violations"});
  }

  std::mt19937_64 rng(kCheckSeed);
  {
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const Octonion x = detail::random_octonion(rng), y = detail::random_octonion(rng);
      const double lhs = norm(x * y), rhs = norm(x) * norm(y);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    out.push_back({group, "composition |xy| = |x||y| (1000 pairs)", worst <= 1e-12, "max rel " + detail::fmt(worst)});
  }
  {
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      const Octonion x = detail::random_octonion(rng), y = detail::random_octonion(rng);
      const Octonion xx = x * x;
      worst = std::max(worst, max_abs_diff(x * (x * y), xx * y));
      worst = std::max(worst, max_abs_diff((y * x) * x, y * xx));
    }
    out.push_back({group, "alternativity", worst <= 1e-12, "max " + detail::fmt(worst)});
  }
  {
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      const Octonion x = detail::random_octonion(rng), y = detail::random_octonion(rng);
      const Octonion lhs = 0.5 * (oct_conj(x) * y + oct_conj(y) * x);
      worst = std::max(worst, max_abs_diff(lhs, oct_inner(x, y) * Octonion::one()));
    }
    out.push_back({group, "(x,y) = (conj(x)y + conj(y)x)/2", worst <= 1e-12, "max " + detail::fmt(worst)});
  }
  {
    bool witness = false;
    for (std::size_t i = 1; i < 8 && !witness; ++i)
      for (std::size_t j = 1; j < 8 && !witness; ++j)
        for (std::size_t k = 1; k < 8 && !witness; ++k) {
          const Octonion a = Octonion::basis(i), b = Octonion::basis(j), c = Octonion::basis(k);
          witness = !((a * b) * c == a * (b * c));
        }
    out.push_back({group, "non-associativity witness", witness, witness ? "found" : "none"});
  }
  return out;
}

inline std::vector<CheckResult> bracket_identity_checks() {
  std::vector<CheckResult> out;
  const auto grid = detail::integer_grid();
  for (const auto& id : kBracketIdentities) {
    int bad = 0;
    for (const auto& a : grid)
      for (const auto& b : grid)
        if (!(bracket(detail::v_of(id.i, a), detail::v_of(id.j, b)) == detail::v_of(id.k, id.rhs(a, b)))) ++bad;
    out.push_back({"bracket identities", "[V" + std::to_string(id.i) + ", V" + std::to_string(id.j) + "] = V" +
                                             std::to_string(id.k) + "(...)",
                   bad == 0, std::to_string(bad) + " of " + std::to_string(grid.size() * grid.size()) + " inexact"});
  }
  std::vector<Triple> traceless;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) traceless.push_back({double(a), double(b), double(-a - b)});
  for (const auto& id : kZetaIdentities) {
    int bad = 0;
    for (const auto& c : traceless) {
      const LieMatrix v = detail::v_of(id.v_axis, c);
      const LieMatrix lhs = id.zeta_first ? bracket(zeta(id.zeta_axis), v) : bracket(v, zeta(id.zeta_axis));
      if (!(lhs == (id.sign * c[id.component]) * zeta(4))) ++bad;
    }
    const std::string name = id.zeta_first
                                 ? "[zeta" + std::to_string(id.zeta_axis) + ", V" + std::to_string(id.v_axis) + "]"
                                 : "[V" + std::to_string(id.v_axis) + ", zeta" + std::to_string(id.zeta_axis) + "]";
    out.push_back({"zeta identities", name + " in R zeta4", bad == 0,
                   std::to_string(bad) + " of " + std::to_string(traceless.size()) + " inexact"});
  }
  return out;
}

inline std::vector<CheckResult> lie_checks() {
  std::vector<CheckResult> out;
  const std::string group = "lie";
  std::mt19937_64 rng(kCheckSeed + 1);
  {
    double worst = 0.0;
    for (int n = 0; n < 500; ++n) {
      const LieMatrix x = detail::random_so8(rng), y = detail::random_so8(rng), z = detail::random_so8(rng);
      const LieMatrix j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
      worst = std::max(worst, j.max_abs());
    }
    out.push_back({group, "Jacobi identity (500 triples)", worst <= 1e-10, "max " + detail::fmt(worst)});
  }
  {
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      const LieMatrix x = detail::random_so8(rng), y = detail::random_so8(rng), z = detail::random_so8(rng);
      worst = std::max(worst, std::abs(inner_g(bracket(z, x), y) + inner_g(x, bracket(z, y))));
    }
    out.push_back({group, "ad-invariance of <,>", worst <= 1e-10, "max " + detail::fmt(worst)});
  }
  {
    double worst = 0.0;
    for (int i = 1; i <= 7; ++i)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          Triple p{}, q{};
          p[a] = 1.0;
          q[b] = 1.0;
          worst = std::max(worst, bracket(detail::v_of(i, p), detail::v_of(i, q)).max_abs());
        }
    out.push_back({group, "each V_i is abelian", worst == 0.0, "max " + detail::fmt(worst)});
  }
  {
    std::vector<LieMatrix> all;
    for (int i = 1; i <= 7; ++i)
      for (int a = 0; a < 3; ++a) {
        Triple p{};
        p[a] = 1.0;
        all.push_back(detail::v_of(i, p));
      }
    const std::size_t d = orthonormalize(all).dim();
    out.push_back({group, "so(7) = V_1 + ... + V_7", d == 21, "dim " + std::to_string(d)});
  }
  return out;
}

inline std::vector<CheckResult> triality_checks() {
  std::vector<CheckResult> out;
  const std::string group = "triality";
  double a2 = 0.0, b2 = 0.0, comp = 0.0;
  for (const auto& [i, j] : so8_pairs) {
    const LieMatrix g = g_basis(i, j);
    a2 = std::max(a2, max_abs_diff(triality_alpha(triality_alpha(g)), g));
    b2 = std::max(b2, max_abs_diff(triality_beta(triality_beta(g)), g));
    comp = std::max(comp, max_abs_diff(triality_gamma(g), triality_beta(triality_alpha(g))));
  }
  out.push_back({group, "alpha^2 = Id", a2 <= 1e-12, "max " + detail::fmt(a2)});
  out.push_back({group, "beta^2 = Id", b2 <= 1e-12, "max " + detail::fmt(b2)});
  out.push_back({group, "gamma = beta o alpha", comp <= 1e-12, "max " + detail::fmt(comp)});

  std::mt19937_64 rng(kCheckSeed + 2);
  for (auto map : {TrialityMap::alpha, TrialityMap::beta, TrialityMap::gamma}) {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      const LieMatrix x = detail::random_so8(rng), y = detail::random_so8(rng);
      worst = std::max(worst, max_abs_diff(apply_triality(map, bracket(x, y)),
                                           bracket(apply_triality(map, x), apply_triality(map, y))));
    }
    const char* name = map == TrialityMap::alpha ? "alpha" : map == TrialityMap::beta ? "beta" : "gamma";
    out.push_back({group, std::string(name) + " preserves brackets", worst <= 1e-10, "max " + detail::fmt(worst)});
  }

  {
    const Svd svd = jacobi_svd(detail::map_minus_identity(triality_alpha));
    const std::size_t d = null_directions(svd).size();
    out.push_back({group, "dim Fix(alpha) = 21", d == 21, "dim " + std::to_string(d)});
  }
  {
    const DenseMatrix b = detail::map_minus_identity(triality_beta);
    const DenseMatrix c = detail::map_minus_identity(triality_gamma);
    DenseMatrix stacked(56, 28);
    for (std::size_t r = 0; r < 28; ++r)
      for (std::size_t col = 0; col < 28; ++col) {
        stacked(r, col) = b(r, col);
        stacked(28 + r, col) = c(r, col);
      }
    const auto kernel = null_directions(jacobi_svd(stacked));
    out.push_back({group, "dim Fix(beta) & Fix(gamma) = 14", kernel.size() == 14,
                   "dim " + std::to_string(kernel.size())});

    // The kernel must be the g2 built from the V_i.
    const Subspace& g2 = named_subalgebra(SubalgebraName::g2).space;
    double worst = 0.0;
    for (const auto& v : kernel) {
      So8Coords c{};
      for (std::size_t r = 0; r < 28; ++r) c[r] = v[r];
      worst = std::max(worst, residual_norm(g2, from_coords(c)));
    }
    out.push_back({group, "Fix(beta) & Fix(gamma) = span of traceless V_i", worst <= 1e-9,
                   "max residual " + detail::fmt(worst)});
  }
  {
    double worst = 0.0;
    std::vector<std::pair<Octonion, Octonion>> pairs;
    for (int n = 0; n < 20; ++n) pairs.emplace_back(detail::random_octonion(rng), detail::random_octonion(rng));
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int n = 0; n < 20; ++n)
      worst = std::max(worst, spin_relation_defect(spin_lift_exp(detail::random_so7(rng), u(rng)), pairs));
    out.push_back({group, "(g1 a)(g2 b) = g2(ab) on spin lifts", worst <= 1e-10, "max " + detail::fmt(worst)});
  }
  {
    bool ok = true;
    for (const auto& x : named_subalgebra(SubalgebraName::g2).basis()) ok = ok && is_automorphism(expm(x, 0.9));
    out.push_back({group, "exp(g2) acts by automorphisms", ok, ok ? "all basis directions" : "failure"});
  }
  return out;
}

inline std::vector<CheckResult> subalgebra_checks() {
  std::vector<CheckResult> out;
  struct Expect {
    SubalgebraName name;
    std::size_t dim;
  };
  constexpr std::array<Expect, 6> expect{{{SubalgebraName::su3, 8},
                                          {SubalgebraName::so4_g2, 6},
                                          {SubalgebraName::u3, 9},
                                          {SubalgebraName::so3_so4, 9},
                                          {SubalgebraName::g2, 14},
                                          {SubalgebraName::so7, 21}}};
  for (const auto& e : expect) {
    const NamedSubalgebra& s = named_subalgebra(e.name);
    const double closure = closure_residual(s.space);
    const double ortho = orthonormality_defect(s.space);
    const bool ok = s.dim() == e.dim && closure < 1e-9 && ortho <= 1e-10;
    out.push_back({"subalgebras", std::string(to_string(e.name)) + " dim " + std::to_string(e.dim), ok,
                   "dim " + std::to_string(s.dim()) + ", closure " + detail::fmt(closure) + ", orthonormality " +
                       detail::fmt(ortho)});
  }
  // Nesting used by the actions.
  const Subspace& g2 = named_subalgebra(SubalgebraName::g2).space;
  const Subspace& so7 = named_subalgebra(SubalgebraName::so7).space;
  double worst = 0.0;
  for (auto n : {SubalgebraName::su3, SubalgebraName::so4_g2})
    for (const auto& b : named_subalgebra(n).basis()) worst = std::max(worst, residual_norm(g2, b));
  for (const auto& b : g2.basis) worst = std::max(worst, residual_norm(so7, b));
  out.push_back({"subalgebras", "su3, so4 in g2 in so7", worst <= 1e-9, "max residual " + detail::fmt(worst)});
  return out;
}

inline std::vector<CheckResult> run_algebra_checks() {
  std::vector<CheckResult> all;
  for (auto&& part : {octonion_checks(), bracket_identity_checks(), lie_checks(), triality_checks(),
                      subalgebra_checks()})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

} // namespace g2orbits
