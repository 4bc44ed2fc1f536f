#pragma once

#include <algorithm>
#include <cmath>

#include "lie.hpp"
#include "matrix.hpp"

namespace g2orbits {

inline double one_norm(const Mat8& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < 8; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < 8; ++r) s += std::abs(a(r, c));
    best = std::max(best, s);
  }
  return best;
}

/// exp(tX) by scaling and squaring around a degree-16 Taylor polynomial.
/// The scaled argument has 1-norm <= 1/2, so the truncation error is far
/// below double precision; squaring keeps the result orthogonal to ~1e-14
/// for skew X with |tX| <= 10.
inline Mat8 expm(const LieMatrix& x, double t = 1.0) {
  Mat8 a = x * t;
  const double n = one_norm(a);
  int squarings = 0;
  if (n > 0.5) squarings = static_cast<int>(std::ceil(std::log2(n / 0.5)));
  a *= std::ldexp(1.0, -squarings);

  Mat8 result = Mat8::identity();
  Mat8 term = Mat8::identity();
  for (int k = 1; k <= 16; ++k) {
    term = term * a;
    term *= 1.0 / k;
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

} // namespace g2orbits
