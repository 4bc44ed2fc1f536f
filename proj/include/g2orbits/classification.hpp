#pragma once

// Closed-form principal curvatures, root finding for minimal and proper
// biharmonic principal orbits, and the per-type classification summary.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eigen.hpp"
#include "errors.hpp"
#include "orbit.hpp"

namespace g2orbits {

/// Published principal curvatures, restated in the geodesic parameter t.
/// Entries are not merged even when two formulas happen to coincide.
inline ClusteredSpectrum closed_form_spectrum(ActionType type, double t) {
  const ActionSpec& spec = action_spec(type);
  const bool upper_closed = !spec.is_singular_parameter(spec.t_max, 0.0);
  if (!(t > spec.t_min) || t > spec.t_max || (!upper_closed && t == spec.t_max))
    throw ParameterOutOfRange("closed_form_spectrum: t = " + std::to_string(t) + " is not a principal parameter of type " +
                              std::string(to_string(type)));

  const double r6 = std::sqrt(6.0), r2 = std::sqrt(2.0);
  // (1/(4 sqrt 6)) (-3 sqrt2 c +- sqrt(18 c^2 + 16)) for c = cot-like argument
  auto cot_pair = [&](double c, int mult, ClusteredSpectrum& out) {
    const double root = std::sqrt(18.0 * c * c + 16.0);
    out.push_back({(-3.0 * r2 * c + root) / (4.0 * r6), mult});
    out.push_back({(-3.0 * r2 * c - root) / (4.0 * r6), mult});
  };
  auto tan_pair = [&](double tn, int mult, ClusteredSpectrum& out) {
    const double root = std::sqrt(18.0 * tn * tn + 16.0);
    out.push_back({(3.0 * r2 * tn + root) / (4.0 * r6), mult});
    out.push_back({(3.0 * r2 * tn - root) / (4.0 * r6), mult});
  };

  ClusteredSpectrum out;
  switch (type) {
  case ActionType::II: {
    const double tn = std::tan(t), ct = 1.0 / std::tan(t);
    out.push_back({0.0, 3});
    out.push_back({std::tan(t / 2) / r6, 1});
    out.push_back({-1.0 / (std::tan(t / 2) * r6), 1});
    const double rt = std::sqrt(4.0 * tn * tn + 3.0), rc = std::sqrt(4.0 * ct * ct + 3.0);
    out.push_back({(2.0 * tn + rt) / (2.0 * r6), 2});
    out.push_back({(2.0 * tn - rt) / (2.0 * r6), 2});
    out.push_back({(-2.0 * ct + rc) / (2.0 * r6), 2});
    out.push_back({(-2.0 * ct - rc) / (2.0 * r6), 2});
    break;
  }
  case ActionType::III:
    out.push_back({0.0, 8});
    cot_pair(std::cos(t) / std::sin(t), 6, out);
    break;
  case ActionType::IV:
    out.push_back({0.0, 8});
    cot_pair(1.0 / std::tan(t / 2), 3, out);
    tan_pair(std::tan(t / 2), 3, out);
    break;
  case ActionType::V:
    out.push_back({0.0, 8});
    cot_pair(std::cos(t) / std::sin(t), 5, out);
    tan_pair(std::tan(t), 1, out);
    break;
  }
  std::sort(out.begin(), out.end(), [](const Eigenpair& a, const Eigenpair& b) { return a.value < b.value; });
  return out;
}

namespace detail {

inline std::string describe(const ClusteredSpectrum& s) {
  std::ostringstream os;
  os.precision(10);
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i].value << " x" << s[i].multiplicity;
  os << '}';
  return os.str();
}

} // namespace detail

/// Max deviation between the engine spectrum and the closed forms after
/// sorted pairing. Both sides are clustered with tol first; differing
/// multiplicity patterns raise StructuralMismatch.
inline double compare_spectra(const ActionSpec& spec, double t, double tol = kDefaultClusterTolerance) {
  const SpectrumReport report = spectrum_report(spec, t, tol);
  const ClusteredSpectrum closed = cluster_sorted(expand(closed_form_spectrum(spec.type, t)), tol);
  bool same = closed.size() == report.curvatures.size();
  for (std::size_t i = 0; same && i < closed.size(); ++i)
    same = closed[i].multiplicity == report.curvatures[i].multiplicity;
  if (!same)
    throw StructuralMismatch("type " + std::string(to_string(spec.type)) + " at t = " + std::to_string(t) +
                             ": engine " + detail::describe(report.curvatures) + " vs closed form " +
                             detail::describe(closed));
  const std::vector<double> a = report.eigenvalues, b = expand(closed);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline constexpr double kEndpointClip = 1e-4;
inline constexpr double kRootTolerance = 1e-12;

/// Scan interval for root finding. Singular endpoints are clipped by
/// kEndpointClip. A principal endpoint is kept, and the scan runs one sample
/// step past it so that a root sitting exactly on it is bracketed.
struct ScanWindow {
  double lo;
  double hi;
  double range_lo;
  double range_hi;
};

inline ScanWindow scan_window(const ActionSpec& spec, int samples) {
  ScanWindow w{spec.t_min, spec.t_max, spec.t_min, spec.t_max};
  const double step = (spec.t_max - spec.t_min) / samples;
  w.lo = spec.is_singular_parameter(spec.t_min, 0.0) ? spec.t_min + kEndpointClip : spec.t_min - step;
  w.hi = spec.is_singular_parameter(spec.t_max, 0.0) ? spec.t_max - kEndpointClip : spec.t_max + step;
  return w;
}

/// All sign changes of f over an even grid of `samples` intervals on
/// [lo, hi], each refined by bisection.
inline std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi, int samples,
                                         double tol = kRootTolerance) {
  std::vector<double> roots;
  double prev_t = lo, prev_f = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double t = lo + (hi - lo) * i / samples;
    const double ft = f(t);
    if (prev_f == 0.0) {
      roots.push_back(prev_t);
    } else if ((prev_f < 0.0) != (ft < 0.0) && ft != 0.0) {
      double a = prev_t, b = t, fa = prev_f;
      for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_f = ft;
  }
  if (prev_f == 0.0) roots.push_back(prev_t);
  return roots;
}

inline constexpr int kMinimalScanSamples = 200;
inline constexpr int kBiharmonicScanSamples = 2000;

/// The principal parameter whose orbit is minimal (zero mean curvature).
inline double find_minimal(const ActionSpec& spec, int samples = kMinimalScanSamples) {
  const ScanWindow w = scan_window(spec, samples);
  auto h = [&](double t) { return curvature_invariants(spec, t).mean_curvature; };
  std::vector<double> roots;
  for (double r : bracket_roots(h, w.lo, w.hi, samples))
    if (r >= w.range_lo - kRootTolerance && r <= w.range_hi + kRootTolerance)
      roots.push_back(std::clamp(r, w.range_lo, w.range_hi));
  if (roots.empty())
    throw NoRoot("find_minimal: mean curvature has no sign change for type " + std::string(to_string(spec.type)));
  if (roots.size() > 1)
    throw Error("find_minimal: " + std::to_string(roots.size()) + " minimal parameters for type " +
                std::string(to_string(spec.type)));
  return roots.front();
}

/// Parameters of proper biharmonic principal orbits: |A|^2 equals the
/// Einstein constant while the mean curvature does not vanish.
inline std::vector<double> find_biharmonic(const ActionSpec& spec, int samples = kBiharmonicScanSamples) {
  const ScanWindow w = scan_window(spec, samples);
  auto f = [&](double t) { return curvature_invariants(spec, t).norm_sq - spec.einstein_constant; };
  std::vector<double> roots;
  for (double r : bracket_roots(f, w.lo, w.hi, samples)) {
    if (r < w.range_lo - kRootTolerance || r > w.range_hi + kRootTolerance) continue;
    r = std::clamp(r, w.range_lo, w.range_hi);
    if (std::abs(curvature_invariants(spec, r).mean_curvature) < 1e-8) continue;
    roots.push_back(r);
  }
  return roots;
}

/// Closed-form minimal and biharmonic parameters as published, in t.
struct PublishedValues {
  double minimal_t;
  std::vector<double> biharmonic_t;
  std::string minimal_formula;
  std::string biharmonic_formula;
};

inline PublishedValues published_values(ActionType type) {
  using std::numbers::pi;
  switch (type) {
  case ActionType::II:
    return {std::atan(std::sqrt(1.5)),
            {std::atan(std::sqrt((5.0 - std::sqrt(19.0)) / 2.0)), std::atan(std::sqrt((5.0 + std::sqrt(19.0)) / 2.0))},
            "tan^-1(sqrt(3/2))",
            "tan^-1(sqrt((5 +- sqrt 19)/2))"};
  case ActionType::III:
    return {pi / 2, {std::atan(3.0 / 4.0)}, "pi/2", "cot^-1(4/3)"};
  case ActionType::IV: {
    const double c = std::atan(6.0 / std::sqrt(14.0));
    return {pi / 2, {c, pi - c}, "pi/2", "cot^-1(sqrt(14)/6), pi - cot^-1(sqrt(14)/6)"};
  }
  case ActionType::V:
    return {std::atan(std::sqrt(5.0)),
            {std::atan((16.0 - std::sqrt(211.0)) / 3.0), std::atan((16.0 + std::sqrt(211.0)) / 3.0)},
            "tan^-1(sqrt 5)",
            "tan^-1((16 +- sqrt 211)/3)"};
  }
  throw UnsupportedAction("published_values");
}

struct ClassificationResult {
  ActionType type;
  double minimal_t;
  double minimal_s;
  bool minimal_austere;
  std::vector<double> biharmonic_t;
  std::vector<double> biharmonic_s;
  PublishedValues published;
  int endpoint_dim_lo;  // orbit dimension at t_min
  int endpoint_dim_hi;  // orbit dimension at t_max
  std::vector<std::string> discrepancy_notes;
};

inline constexpr double kMinimalAgreement = 1e-8;
inline constexpr double kBiharmonicAgreement = 1e-6;

inline ClassificationResult classify(const ActionSpec& spec) {
  ClassificationResult r;
  r.type = spec.type;
  r.minimal_t = find_minimal(spec);
  r.minimal_s = spec.s_from_t(r.minimal_t);
  r.minimal_austere = spectrum_report(spec, r.minimal_t).austere;
  r.biharmonic_t = find_biharmonic(spec);
  for (double t : r.biharmonic_t) r.biharmonic_s.push_back(spec.s_from_t(t));
  r.published = published_values(spec.type);
  r.endpoint_dim_lo = static_cast<int>(orbit_frame(spec, spec.t_min).orbit_dim());
  r.endpoint_dim_hi = static_cast<int>(orbit_frame(spec, spec.t_max).orbit_dim());

  std::ostringstream os;
  os.precision(12);
  if (std::abs(r.minimal_t - r.published.minimal_t) > kMinimalAgreement) {
    os << "minimal parameter t = " << r.minimal_t << " differs from the published " << r.published.minimal_formula
       << " = " << r.published.minimal_t;
    r.discrepancy_notes.push_back(os.str());
    os.str("");
  }

  std::vector<double> published = r.published.biharmonic_t;
  std::sort(published.begin(), published.end());
  bool agree = published.size() == r.biharmonic_t.size();
  for (std::size_t i = 0; agree && i < published.size(); ++i)
    agree = std::abs(published[i] - r.biharmonic_t[i]) <= kBiharmonicAgreement;
  if (!agree) {
    os << "biharmonic parameters from |A|^2 = " << spec.einstein_constant << ": t = {";
    for (std::size_t i = 0; i < r.biharmonic_t.size(); ++i)
      os << (i ? ", " : "") << r.biharmonic_t[i] << " (tan^2 t = " << std::pow(std::tan(r.biharmonic_t[i]), 2) << ")";
    os << "}; published " << r.published.biharmonic_formula << " gives t = {";
    for (std::size_t i = 0; i < published.size(); ++i) os << (i ? ", " : "") << published[i];
    os << "}";
    if (spec.type == ActionType::V)
      os << "; the computed roots satisfy tan^2 t = (16 +- sqrt 211)/3, so the published formula is missing a "
            "square root";
    r.discrepancy_notes.push_back(os.str());
  }
  return r;
}

} // namespace g2orbits
