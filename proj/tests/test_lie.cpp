#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace g2orbits;
using testing_support::random_so8;

namespace {

Vec8 e(std::size_t i) {
  Vec8 v{};
  v[i] = 1.0;
  return v;
}

Vec8 neg(Vec8 v) {
  for (auto& x : v) x = -x;
  return v;
}

} // namespace

TEST(GBasis, ActionOnBasis) {
  EXPECT_EQ(g_basis(1, 2) * e(1), e(2));
  EXPECT_EQ(g_basis(1, 2) * e(2), neg(e(1)));
  EXPECT_EQ(g_basis(1, 2) * e(5), Vec8{});
  EXPECT_EQ(g_basis(2, 1), -g_basis(1, 2));
}

TEST(GBasis, InvalidIndex) {
  EXPECT_THROW(g_basis(3, 3), InvalidIndex);
  EXPECT_THROW(g_basis(-1, 2), InvalidIndex);
  EXPECT_THROW(g_basis(0, 8), InvalidIndex);
}

TEST(GBasis, OrthonormalAndSkew) {
  for (const auto& [i, j] : so8_pairs) {
    EXPECT_EQ(skew_defect(g_basis(i, j)), 0.0);
    for (const auto& [k, l] : so8_pairs)
      EXPECT_EQ(inner_g(g_basis(i, j), g_basis(k, l)), (i == k && j == l) ? 1.0 : 0.0);
  }
}

TEST(VElement, Examples) {
  EXPECT_EQ(v_elem(1, 1, 0, 0), g_basis(2, 3));
  EXPECT_EQ(zeta(4), -g_basis(1, 5) + g_basis(2, 6) - g_basis(3, 7));
  EXPECT_EQ(v_elem(2, 0, 0, 0), LieMatrix{});
  EXPECT_THROW(v_elem(0, 1, 1, 1), InvalidIndex);
  EXPECT_THROW(v_elem(8, 1, 1, 1), InvalidIndex);
}

TEST(VElement, LiesInSo7) {
  for (int i = 1; i <= 7; ++i) {
    const LieMatrix v = v_elem(i, 1.5, -0.5, 2.0);
    EXPECT_EQ(skew_defect(v), 0.0);
    for (int k = 0; k < 8; ++k) {
      EXPECT_EQ(v(0, k), 0.0);
      EXPECT_EQ(v(k, 0), 0.0);
    }
  }
}

TEST(VElement, CoefficientsRoundTrip) {
  const VElement c = v_coeffs(6, v_elem(6, 0.25, -1.0, 3.0));
  EXPECT_DOUBLE_EQ(c.lambda, 0.25);
  EXPECT_DOUBLE_EQ(c.mu, -1.0);
  EXPECT_DOUBLE_EQ(c.nu, 3.0);
}

TEST(VElement, G2MembershipIffTraceless) {
  const Subspace& g2 = named_subalgebra(SubalgebraName::g2).space;
  for (int i = 1; i <= 7; ++i) {
    EXPECT_LE(residual_norm(g2, v_elem(i, 2, -1, -1)), 1e-12);
    EXPECT_LE(residual_norm(g2, v_elem(i, 0.3, 0.5, -0.8)), 1e-12);
    EXPECT_GT(residual_norm(g2, v_elem(i, 1, 1, 1)), 0.5);
    EXPECT_EQ(max_abs_diff(triality_beta(v_elem(i, 1, -1, 0)), v_elem(i, 1, -1, 0)), 0.0);
  }
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(v_elem(1, 1, 0, 0), v_elem(4, 0, 0, 1)), v_elem(5, 0, -1, 0));
  EXPECT_EQ(bracket(zeta(1), v_elem(5, 1, 0, -1)), -zeta(4));
  std::mt19937_64 rng(10);
  const LieMatrix x = random_so8(rng);
  EXPECT_EQ(bracket(x, x).max_abs(), 0.0);
}

TEST(Bracket, IdentitiesExactOnIntegerGrid) {
  for (const auto& id : kBracketIdentities)
    for (int a0 = -2; a0 <= 2; ++a0)
      for (int a1 = -2; a1 <= 2; ++a1)
        for (int a2 = -2; a2 <= 2; ++a2)
          for (int b0 = -2; b0 <= 2; ++b0)
            for (int b1 = -2; b1 <= 2; ++b1)
              for (int b2 = -2; b2 <= 2; ++b2) {
                const Triple a{double(a0), double(a1), double(a2)}, b{double(b0), double(b1), double(b2)};
                const Triple c = id.rhs(a, b);
                ASSERT_EQ(bracket(v_elem(id.i, a[0], a[1], a[2]), v_elem(id.j, b[0], b[1], b[2])),
                          v_elem(id.k, c[0], c[1], c[2]))
                    << "[V" << id.i << ", V" << id.j << "]";
              }
}

TEST(Bracket, ZetaIdentitiesUnderTracelessConstraint) {
  for (const auto& id : kZetaIdentities)
    for (int l = -2; l <= 2; ++l)
      for (int m = -2; m <= 2; ++m) {
        const Triple c{double(l), double(m), double(-l - m)};
        const LieMatrix v = v_elem(id.v_axis, c[0], c[1], c[2]);
        const LieMatrix lhs = id.zeta_first ? bracket(zeta(id.zeta_axis), v) : bracket(v, zeta(id.zeta_axis));
        EXPECT_EQ(lhs, (id.sign * c[id.component]) * zeta(4));
      }
}

TEST(Bracket, JacobiIdentity) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    const LieMatrix x = random_so8(rng), y = random_so8(rng), z = random_so8(rng);
    const LieMatrix j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    ASSERT_LE(j.max_abs(), 1e-10);
  }
}

TEST(Bracket, EachVIsAbelian) {
  for (int i = 1; i <= 7; ++i)
    EXPECT_EQ(bracket(v_elem(i, 1, 2, 3), v_elem(i, -1, 0.5, 4)).max_abs(), 0.0);
}

TEST(InnerProduct, Examples) {
  EXPECT_DOUBLE_EQ(inner_g(v_elem(1, 1, 2, 3), v_elem(1, 1, 1, 1)), 6.0);
  EXPECT_DOUBLE_EQ(inner_g(v_elem(1, 1, 2, 3), v_elem(2, 4, 5, 6)), 0.0);
  EXPECT_DOUBLE_EQ(inner_g(zeta(4), zeta(4)), 3.0);
}

TEST(InnerProduct, AdInvariant) {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 200; ++n) {
    const LieMatrix x = random_so8(rng), y = random_so8(rng), z = random_so8(rng);
    EXPECT_LE(std::abs(inner_g(bracket(z, x), y) + inner_g(x, bracket(z, y))), 1e-10);
  }
}

TEST(Expm, Examples) {
  EXPECT_EQ(expm(zeta(3), 0.0), Mat8::identity());
  for (double t : {0.3, 1.0, 2.5, -4.0}) {
    const Vec8 v = expm(g_basis(0, 1), t) * e(0);
    EXPECT_NEAR(v[0], std::cos(t), 1e-13);
    EXPECT_NEAR(v[1], std::sin(t), 1e-13);
    for (int k = 2; k < 8; ++k) EXPECT_EQ(v[k], 0.0);
  }
}

TEST(Expm, OrthogonalAndOneParameter) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 50; ++n) {
    const LieMatrix x = random_so8(rng);
    const double s = u(rng), t = u(rng);
    const Mat8 g = expm(x, t);
    EXPECT_LE(orthogonality_defect(g), 1e-11);
    EXPECT_NEAR(determinant(g), 1.0, 1e-11);
    EXPECT_LE(max_abs_diff(expm(x, s + t), expm(x, s) * expm(x, t)), 1e-11);
  }
}

TEST(Expm, LargeArgument) {
  // |tX| around 10: a rotation by 10 radians in the (e_2, e_3) plane.
  const Vec8 v = expm(g_basis(2, 3), 10.0) * e(2);
  EXPECT_NEAR(v[2], std::cos(10.0), 1e-12);
  EXPECT_NEAR(v[3], std::sin(10.0), 1e-12);
}

TEST(Subspace, OrthonormalizeDropsDependentVectors) {
  EXPECT_EQ(orthonormalize({g_basis(1, 2), 2.0 * g_basis(1, 2)}).dim(), 1u);
  std::vector<LieMatrix> so7;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) so7.push_back(g_basis(i, j));
  const Subspace s = orthonormalize(so7);
  EXPECT_EQ(s.dim(), 21u);
  EXPECT_LE(orthonormality_defect(s), 1e-10);
  EXPECT_EQ(orthonormalize(std::vector<LieMatrix>{}).dim(), 0u);
  EXPECT_EQ(orthonormalize({LieMatrix{}}).dim(), 0u);
}

TEST(Subspace, G2GeneratorsSpanFourteen) {
  std::vector<LieMatrix> gens;
  for (int i = 1; i <= 7; ++i) {
    gens.push_back(v_elem(i, 1, -1, 0));
    gens.push_back(v_elem(i, 0, 1, -1));
  }
  EXPECT_EQ(orthonormalize(gens).dim(), 14u);
}

TEST(Subspace, Complement) {
  const Subspace a = orthonormalize({g_basis(2, 3)});
  const Subspace b = orthonormalize({g_basis(2, 3), g_basis(4, 5)});
  const Subspace c = complement(a, b);
  ASSERT_EQ(c.dim(), 1u);
  EXPECT_NEAR(std::abs(inner_g(c.basis[0], g_basis(4, 5))), 1.0, 1e-12);
  EXPECT_EQ(complement(b, b).dim(), 0u);
  EXPECT_THROW(complement(orthonormalize({g_basis(0, 1)}), b), NotASubspace);
}

TEST(Subspace, TypeIINormalIsT4) {
  const OrbitFrame f = orbit_frame(action_spec(ActionType::II), 0.5);
  ASSERT_EQ(f.tangent.dim(), 13u);
  const Subspace n = complement(f.tangent, named_subalgebra(SubalgebraName::g2).space);
  ASSERT_EQ(n.dim(), 1u);
  EXPECT_NEAR(std::abs(inner_g(n.basis[0], v_elem(4, 2, -1, -1) / std::sqrt(6.0))), 1.0, 1e-9);
}

TEST(SymEigen, Examples) {
  DenseMatrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 1;
  d(2, 2) = 2;
  EXPECT_EQ(sym_eigen(d, 1e-6), (ClusteredSpectrum{{1.0, 2}, {2.0, 1}}));

  DenseMatrix r(2, 2);
  r(0, 1) = r(1, 0) = 1;
  const auto s = sym_eigen(r);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0].value, -1.0, 1e-14);
  EXPECT_NEAR(s[1].value, 1.0, 1e-14);
  EXPECT_EQ(s[0].multiplicity, 1);

  DenseMatrix bad(2, 2);
  bad(0, 1) = 1;
  EXPECT_THROW(sym_eigen(bad), AsymmetricMatrix);
}

TEST(SymEigen, TypeIIBlockAtQuarterPi) {
  // B_1 / (2 sqrt 6) at t = pi/4, where cot t = 1.
  const double k = 1.0 / (2.0 * std::sqrt(6.0)), r3 = std::sqrt(3.0);
  DenseMatrix b(4, 4);
  b(0, 3) = b(3, 0) = r3 * k;
  b(1, 3) = b(3, 1) = -k;
  b(3, 3) = -4.0 * k;
  const auto s = sym_eigen(b);
  // lambda^2 + 4 lambda - 4 = 0
  const double lo = (-4.0 - std::sqrt(32.0)) / 2.0 * k, hi = (-4.0 + std::sqrt(32.0)) / 2.0 * k;
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s[0].value, lo, 1e-13);
  EXPECT_NEAR(s[1].value, 0.0, 1e-13);
  EXPECT_EQ(s[1].multiplicity, 2);
  EXPECT_NEAR(s[2].value, hi, 1e-13);
}

TEST(SymEigen, RandomSpectrumReconstructs) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> n(0.0, 1.0);
  const std::size_t dim = 20;
  DenseMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) a(i, j) = a(j, i) = n(rng);
  const SymmetricEigen eig = jacobi_eigen(a);
  EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
  DenseMatrix lambda(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) lambda(i, i) = eig.values[i];
  const DenseMatrix back = eig.vectors * lambda * eig.vectors.transpose();
  EXPECT_LE((back - a).max_abs(), 1e-11);
  EXPECT_LE((eig.vectors.transpose() * eig.vectors - DenseMatrix::identity(dim)).max_abs(), 1e-12);
}

TEST(Svd, LeastSquaresAndNullSpace) {
  // Columns: c0, c1, c0 + c1 (one null direction).
  DenseMatrix a(4, 3);
  a(0, 0) = 1;
  a(1, 1) = 2;
  a(0, 2) = 1;
  a(1, 2) = 2;
  const Svd svd = jacobi_svd(a);
  const auto null = null_directions(svd);
  ASSERT_EQ(null.size(), 1u);
  EXPECT_NEAR(std::abs(null[0][0]), 1.0 / std::sqrt(3.0), 1e-12);
  const auto c = least_squares(svd, {3.0, 4.0, 0.0, 0.0});
  EXPECT_NEAR(c[0] + c[2], 3.0, 1e-12);
  EXPECT_NEAR(2.0 * (c[1] + c[2]), 4.0, 1e-12);
}
