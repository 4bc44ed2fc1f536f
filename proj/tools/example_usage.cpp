// Library walkthrough: inspect a type III principal orbit, then locate its
// minimal and biharmonic members.

#include <iostream>
#include <numbers>

#include "g2orbits/g2orbits.hpp"

int main() {
  using namespace g2orbits;

  const ActionSpec& spec = action_spec(ActionType::III);

  const double t = 1.0;
  const SpectrumReport r = spectrum_report(spec, t);
  std::cout << "type III at t = " << t << " (s = " << r.s << "): orbit dimension " << r.orbit_dim << '\n';
  for (const auto& [value, mult] : r.curvatures) std::cout << "  " << value << "  x" << mult << '\n';
  std::cout << "  mean curvature " << r.mean_curvature << ", |A|^2 " << r.norm_sq << '\n';
  std::cout << "  max deviation from the closed forms " << compare_spectra(spec, t) << '\n';

  // Hypersurface directions fail at the singular orbit.
  try {
    unit_normal(spec, 0.0);
  } catch (const SingularOrbit& e) {
    std::cout << "t = 0 is singular, codimension " << e.codimension() << '\n';
  }

  const ClassificationResult c = classify(spec);
  std::cout << "minimal at t = " << c.minimal_t << " (austere: " << std::boolalpha << c.minimal_austere << ")\n";
  for (double b : c.biharmonic_t) std::cout << "proper biharmonic at t = " << b << '\n';
  std::cout << "weakly reflective isometry checks: " << verify_reflection(spec) << '\n';
}
