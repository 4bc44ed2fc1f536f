#pragma once

// Orbit geometry of the (H x K)-actions (h, k) . x = h x k^{-1} on a compact
// group G with bi-invariant metric <X, Y> = -1/2 tr(XY).
//
// Every tangent vector is translated back to the identity by dL_x^{-1}. A
// Killing field generated by (X, Y) in h x k takes the value
// Ad(x^{-1})X - Y there, and the Levi-Civita connection on Killing fields is
//   (nabla_{Z1*} Z2*)_x = -1/2 dL_x [Ad(x^{-1})X1 - Y1, Ad(x^{-1})X2 + Y2].

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eigen.hpp"
#include "errors.hpp"
#include "expm.hpp"
#include "lie.hpp"
#include "subspace.hpp"
#include "triality.hpp"

namespace g2orbits {

enum class ActionType { II, III, IV, V };

inline constexpr std::array<ActionType, 4> kAllActionTypes = {ActionType::II, ActionType::III, ActionType::IV,
                                                              ActionType::V};

inline std::string_view to_string(ActionType a) {
  switch (a) {
  case ActionType::II: return "II";
  case ActionType::III: return "III";
  case ActionType::IV: return "IV";
  case ActionType::V: return "V";
  }
  return "?";
}

inline ActionType parse_action_type(std::string_view s) {
  for (auto a : kAllActionTypes)
    if (to_string(a) == s) return a;
  throw UnsupportedAction("unknown action type '" + std::string(s) + "'");
}

struct ActionSpec {
  ActionType type;
  SubalgebraName ambient;
  SubalgebraName h;
  SubalgebraName k;
  double einstein_constant;
  LieMatrix geodesic_generator;  // g(t) = exp(t * geodesic_generator)
  LieMatrix section_generator;   // h(s) = exp(s * section_generator)
  double t_min;
  double t_max;
  double section_ratio;                     // t = section_ratio * s
  std::vector<double> singular_parameters;  // within [t_min, t_max]

  const NamedSubalgebra& ambient_algebra() const { return named_subalgebra(ambient); }
  const NamedSubalgebra& h_algebra() const { return named_subalgebra(h); }
  const NamedSubalgebra& k_algebra() const { return named_subalgebra(k); }

  Mat8 geodesic_point(double t) const { return expm(geodesic_generator, t); }
  double t_from_s(double s) const { return section_ratio * s; }
  double s_from_t(double t) const { return t / section_ratio; }

  bool is_singular_parameter(double t, double tol = 1e-6) const {
    return std::any_of(singular_parameters.begin(), singular_parameters.end(),
                       [&](double p) { return std::abs(t - p) <= tol; });
  }
};

namespace detail {

inline ActionSpec build_action_spec(ActionType type) {
  using std::numbers::pi;
  const LieMatrix z4 = zeta(4);
  switch (type) {
  case ActionType::II:
    return {type,      SubalgebraName::g2, SubalgebraName::so4_g2, SubalgebraName::su3, 8.0,
            v_elem(4, 1, -1, 0), v_elem(4, 2, -1, -1), 0.0, pi / 2, 2.0, {0.0, pi / 2}};
  case ActionType::III:
    return {type, SubalgebraName::so7, SubalgebraName::g2, SubalgebraName::g2, 10.0,
            v_elem(4, 1, 0, 1), z4, 0.0, pi / 2, 1.5, {0.0}};
  case ActionType::IV:
    return {type, SubalgebraName::so7, SubalgebraName::so3_so4, SubalgebraName::g2, 10.0,
            v_elem(4, 1, 0, 0), z4, 0.0, pi, 3.0, {0.0, pi}};
  case ActionType::V:
    return {type, SubalgebraName::so7, SubalgebraName::u3, SubalgebraName::g2, 10.0,
            v_elem(4, 0, 1, 1), z4, 0.0, pi / 2, 1.5, {0.0, pi / 2}};
  }
  throw UnsupportedAction("unknown action type");
}

} // namespace detail

inline const ActionSpec& action_spec(ActionType type) {
  static const std::array<ActionSpec, 4> specs = {
      detail::build_action_spec(ActionType::II), detail::build_action_spec(ActionType::III),
      detail::build_action_spec(ActionType::IV), detail::build_action_spec(ActionType::V)};
  return specs[static_cast<std::size_t>(type)];
}

/// Ad(x^{-1}) X = x^{-1} X x for orthogonal x.
inline LieMatrix ad_inverse(const Mat8& x, const LieMatrix& X) { return x.transpose() * X * x; }

/// A pair (X, Y) in h x k; its Killing field at g(t) is dL (Ad(g^{-1})X - Y).
struct Lift {
  LieMatrix x;
  LieMatrix y;
};

struct OrbitFrame {
  double t = 0.0;
  Mat8 point;              // g(t)
  Subspace tangent;        // identity-translated tangent space of H g(t) K
  Subspace normal;         // its complement in the ambient Lie algebra
  std::vector<Lift> lifts; // lifts[i] generates tangent.basis[i]
  std::vector<Lift> isotropy;  // (X, Y) with Ad(g^{-1})X = Y, i.e. lifts of zero

  std::size_t orbit_dim() const { return tangent.dim(); }
  std::size_t codimension() const { return normal.dim(); }
};

inline constexpr double kLiftTolerance = 1e-9;

/// Tangent space, normal space and Killing-field lifts at g(t). Lifts are the
/// minimum-norm least-squares solutions of Ad(g^{-1})X - Y = u over h x k.
inline OrbitFrame orbit_frame(const ActionSpec& spec, double t) {
  const auto& h = spec.h_algebra().basis();
  const auto& k = spec.k_algebra().basis();
  const std::size_t nh = h.size(), nk = k.size();

  OrbitFrame f;
  f.t = t;
  f.point = spec.geodesic_point(t);

  std::vector<LieMatrix> gens;
  gens.reserve(nh + nk);
  for (const auto& X : h) gens.push_back(ad_inverse(f.point, X));
  for (const auto& Y : k) gens.push_back(-Y);

  f.tangent = orthonormalize(gens);
  f.normal = complement(f.tangent, spec.ambient_algebra().space);

  DenseMatrix a(28, nh + nk);
  for (std::size_t c = 0; c < gens.size(); ++c) {
    const So8Coords col = to_coords(gens[c]);
    for (std::size_t r = 0; r < 28; ++r) a(r, c) = col[r];
  }
  const Svd svd = jacobi_svd(a);

  auto assemble = [&](const std::vector<double>& coef) {
    Lift l;
    for (std::size_t i = 0; i < nh; ++i) l.x += coef[i] * h[i];
    for (std::size_t j = 0; j < nk; ++j) l.y += coef[nh + j] * k[j];
    return l;
  };

  f.lifts.reserve(f.tangent.dim());
  for (const auto& u : f.tangent.basis) {
    const So8Coords uc = to_coords(u);
    const Lift l = assemble(least_squares(svd, std::vector<double>(uc.begin(), uc.end())));
    const double residual = norm_g(ad_inverse(f.point, l.x) - l.y - u);
    if (residual > kLiftTolerance)
      throw Error("orbit_frame: lift residual " + std::to_string(residual) + " at t = " + std::to_string(t));
    f.lifts.push_back(l);
  }
  for (const auto& d : null_directions(svd)) f.isotropy.push_back(assemble(d));
  return f;
}

inline constexpr double kNormalTolerance = 1e-9;
inline constexpr double kAsymmetryTolerance = 1e-9;

/// S_ij = -1/2 <[Ad X_i - Y_i, Ad X_j + Y_j], normal>, before symmetrization.
inline DenseMatrix shape_operator_raw(const OrbitFrame& frame, std::span<const Lift> lifts, const LieMatrix& normal) {
  const std::size_t n = lifts.size();
  std::vector<LieMatrix> minus(n), plus(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LieMatrix ax = ad_inverse(frame.point, lifts[i].x);
    minus[i] = ax - lifts[i].y;
    plus[i] = ax + lifts[i].y;
  }
  // <[A, B], N> = <A, [B, N]> by ad-invariance, so one bracket per column.
  DenseMatrix s(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const LieMatrix q = bracket(plus[j], normal);
    for (std::size_t i = 0; i < n; ++i) s(i, j) = -0.5 * inner_g(minus[i], q);
  }
  return s;
}

inline DenseMatrix shape_operator_raw(const OrbitFrame& frame, const LieMatrix& normal) {
  return shape_operator_raw(frame, std::span<const Lift>(frame.lifts), normal);
}

/// Shape operator A^normal in the orthonormal tangent basis of the frame.
inline DenseMatrix shape_operator(const OrbitFrame& frame, const LieMatrix& normal) {
  const double len = norm_g(normal);
  if (std::abs(len - 1.0) > kNormalTolerance)
    throw InvalidNormal("shape_operator: normal has length " + std::to_string(len));
  for (const auto& u : frame.tangent.basis) {
    const double d = std::abs(inner_g(u, normal));
    if (d > kNormalTolerance)
      throw InvalidNormal("shape_operator: normal is not orthogonal to the orbit (" + std::to_string(d) + ")");
  }
  DenseMatrix s = shape_operator_raw(frame, normal);
  // Entries grow like 1/t near a singular orbit; the bound scales with them.
  const double defect = s.asymmetry();
  if (defect > kAsymmetryTolerance * std::max(1.0, s.max_abs())) {
    std::ostringstream os;
    os << "shape_operator: asymmetry defect " << defect << " at t = " << frame.t;
    throw Error(os.str());
  }
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = i + 1; j < s.cols(); ++j) s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
  return s;
}

inline DenseMatrix shape_operator(const ActionSpec& spec, double t, const LieMatrix& normal) {
  return shape_operator(orbit_frame(spec, t), normal);
}

/// The unit normal of a hypersurface orbit, oriented so that it pairs
/// positively with the section generator.
inline LieMatrix unit_normal(const ActionSpec& spec, const OrbitFrame& frame) {
  if (frame.codimension() != 1) throw SingularOrbit(static_cast<int>(frame.codimension()), frame.t);
  LieMatrix n = frame.normal.basis.front();
  if (inner_g(n, spec.section_generator) < 0.0) n = -n;
  return n;
}

inline LieMatrix unit_normal(const ActionSpec& spec, double t) { return unit_normal(spec, orbit_frame(spec, t)); }

/// Trace and squared norm of the shape operator for the canonical normal.
struct CurvatureInvariants {
  double mean_curvature;
  double norm_sq;
};

inline CurvatureInvariants curvature_invariants(const ActionSpec& spec, double t) {
  const OrbitFrame frame = orbit_frame(spec, t);
  const DenseMatrix s = shape_operator(frame, unit_normal(spec, frame));
  return {s.trace(), s.frobenius_sq()};
}

/// True iff the multiset {(value, multiplicity)} is invariant under negation.
inline bool is_austere(const ClusteredSpectrum& curvatures, double tol = kDefaultClusterTolerance) {
  for (const auto& e : curvatures) {
    const bool matched = std::any_of(curvatures.begin(), curvatures.end(), [&](const Eigenpair& o) {
      return std::abs(e.value + o.value) <= tol && o.multiplicity == e.multiplicity;
    });
    if (!matched) return false;
  }
  return true;
}

struct SpectrumReport {
  ActionType type;
  double t;
  double s;
  int orbit_dim;
  DenseMatrix shape;
  ClusteredSpectrum curvatures;
  std::vector<double> eigenvalues;  // ascending, unclustered
  double mean_curvature;
  double norm_sq;
  bool austere;
  bool cluster_ambiguous;  // two clusters are closer than kAmbiguityFactor * cluster_tol
};

inline constexpr double kSingularGuard = 1e-6;
inline constexpr double kAmbiguityFactor = 1e3;

inline void require_principal_parameter(const ActionSpec& spec, double t) {
  if (t < spec.t_min || t > spec.t_max)
    throw ParameterOutOfRange("t = " + std::to_string(t) + " outside [" + std::to_string(spec.t_min) + ", " +
                              std::to_string(spec.t_max) + "] for type " + std::string(to_string(spec.type)));
  if (spec.is_singular_parameter(t, kSingularGuard))
    throw NearSingularParameter("t = " + std::to_string(t) + " is within " + std::to_string(kSingularGuard) +
                                " of a singular parameter of type " + std::string(to_string(spec.type)));
}

inline SpectrumReport spectrum_report(const ActionSpec& spec, double t,
                                      double cluster_tol = kDefaultClusterTolerance) {
  require_principal_parameter(spec, t);
  const OrbitFrame frame = orbit_frame(spec, t);
  const LieMatrix n = unit_normal(spec, frame);
  SpectrumReport r{spec.type, t, spec.s_from_t(t), static_cast<int>(frame.orbit_dim()), shape_operator(frame, n),
                   {}, {}, 0.0, 0.0, false, false};
  r.eigenvalues = jacobi_eigen(r.shape).values;
  r.curvatures = cluster_sorted(r.eigenvalues, cluster_tol);
  r.mean_curvature = r.shape.trace();
  r.norm_sq = r.shape.frobenius_sq();
  r.austere = is_austere(r.curvatures, cluster_tol);
  for (std::size_t i = 1; i < r.curvatures.size(); ++i)
    if (r.curvatures[i].value - r.curvatures[i - 1].value < kAmbiguityFactor * cluster_tol) r.cluster_ambiguous = true;
  return r;
}

/// Checks the explicit isometries that make the minimal orbits of types III
/// and IV weakly reflective.
///
/// III: f(x) = g(pi) x^{-1}. g(pi) lies in G2, f fixes g(pi/2), Ad(g(pi/2))
///      fixes zeta_4 so df negates the normal, and the RP^7 invariant of
///      f(p) equals that of p for sampled orbit points p = h g(pi/2) k.
/// IV:  f(x) = a x sigma with a = g(pi/2) sigma g(-pi/2). a commutes with
///      sigma, f fixes g(pi/2), and sigma zeta_4 sigma = -zeta_4.
inline bool verify_reflection(const ActionSpec& spec, double tol = 1e-9) {
  using std::numbers::pi;
  const LieMatrix z4 = zeta(4);
  const Mat8 mid = spec.geodesic_point(pi / 2);

  switch (spec.type) {
  case ActionType::III: {
    const Mat8 g_pi = spec.geodesic_point(pi);
    if (!is_automorphism(g_pi, tol)) return false;
    if (max_abs_diff(g_pi * mid.transpose(), mid) > tol) return false;
    if (max_abs_diff(mid * z4 * mid.transpose(), z4) > tol) return false;

    const SpinElement lift_pi = spin_lift_exp(spec.geodesic_generator, pi);
    const SpinElement lift_mid = spin_lift_exp(spec.geodesic_generator, pi / 2);
    const auto& g2 = named_subalgebra(SubalgebraName::g2).basis();
    std::mt19937_64 rng(0x5eedu);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto random_g2_lift = [&] {
      LieMatrix x;
      for (const auto& b : g2) x += normal(rng) * b;
      return spin_lift_exp(x, 1.0);
    };
    const double expected = rp7_invariant(lift_mid);
    for (int trial = 0; trial < 32; ++trial) {
      const SpinElement p = random_g2_lift() * lift_mid * random_g2_lift();
      const SpinElement image = lift_pi * p.inverse();
      if (std::abs(rp7_invariant(image) - expected) > tol) return false;
      if (std::abs(rp7_invariant(p) - expected) > tol) return false;
    }
    return true;
  }
  case ActionType::IV: {
    const Mat8 sigma = sigma_involution();
    const Mat8 a = mid * sigma * mid.transpose();
    if (max_abs_diff(a * sigma, sigma * a) > tol) return false;
    if (std::abs(a(0, 0) - 1.0) > tol || std::abs(determinant(a) - 1.0) > tol) return false;
    if (max_abs_diff(a * mid * sigma, mid) > tol) return false;
    if (max_abs_diff(sigma * z4 * sigma, -z4) > tol) return false;
    return true;
  }
  default:
    throw UnsupportedAction("verify_reflection: no explicit reflection for type " + std::string(to_string(spec.type)));
  }
}

} // namespace g2orbits
