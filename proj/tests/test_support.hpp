#pragma once

#include <random>
#include <vector>

#include "g2orbits/g2orbits.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Type oracle_type(g2orbits::ActionType t) {
  switch (t) {
  case g2orbits::ActionType::II: return oracle::Type::II;
  case g2orbits::ActionType::III: return oracle::Type::III;
  case g2orbits::ActionType::IV: return oracle::Type::IV;
  case g2orbits::ActionType::V: return oracle::Type::V;
  }
  return oracle::Type::II;
}

/// n principal parameters drawn uniformly, kept 0.02 away from singular ends.
inline std::vector<double> random_principal_t(const g2orbits::ActionSpec& spec, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(spec.t_min + 0.02, spec.t_max - 0.02);
  std::vector<double> ts(n);
  for (auto& t : ts) t = u(rng);
  return ts;
}

inline g2orbits::LieMatrix random_so8(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  g2orbits::So8Coords c;
  for (auto& x : c) x = u(rng);
  return g2orbits::from_coords(c);
}

inline g2orbits::Octonion random_octonion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  g2orbits::Octonion o;
  for (auto& c : o.coeffs) c = u(rng);
  return o;
}

/// Random element of the span of a subalgebra basis.
inline g2orbits::LieMatrix random_in(const g2orbits::NamedSubalgebra& s, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  g2orbits::LieMatrix x;
  for (const auto& b : s.basis()) x += n(rng) * b;
  return x;
}

} // namespace testing_support
