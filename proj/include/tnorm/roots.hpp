#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "tnorm/polynomial.hpp"

namespace tnorm {

using Complex = std::complex<long double>;

/// All complex roots of a nonconstant integer polynomial by Aberth-Ehrlich
/// simultaneous iteration in long double. Floating-point only; every exact
/// quantity in the library is computed elsewhere.
inline std::vector<Complex> complex_roots(const IntPolynomial& p, long double tol = 1e-10L,
                                          std::size_t max_iter = 2000) {
  require(p.degree() >= 1, ErrorCode::InvalidArgument, "root finding needs degree >= 1");
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<long double> c(n + 1);
  const long double lead = static_cast<long double>(p.leading().get_d());
  for (std::size_t i = 0; i <= n; ++i) c[i] = static_cast<long double>(p.coeffs()[i].get_d()) / lead;

  auto eval = [&](Complex z, Complex& dz) {
    Complex v = 0, d = 0;
    for (std::size_t i = n + 1; i-- > 0;) {
      d = d * z + v;
      v = v * z + c[i];
    }
    dz = d;
    return v;
  };

  // Cauchy bound on the root moduli.
  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1 + radius;

  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(i) / static_cast<long double>(n) + 0.4L;
    z[i] = std::polar(radius * 0.5L, angle);
  }

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex dp;
      Complex v = eval(z[i], dp);
      if (v == Complex(0)) continue;
      Complex ratio = v / dp;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      Complex step = ratio / (1.0L - ratio * repulsion);
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < tol * 1e-6L) break;
  }
  // Newton polish.
  for (auto& r : z)
    for (int k = 0; k < 3; ++k) {
      Complex dp;
      Complex v = eval(r, dp);
      if (dp == Complex(0)) break;
      Complex cand = r - v / dp;
      Complex unused;
      if (std::abs(eval(cand, unused)) >= std::abs(v)) break;
      r = cand;
    }
  return z;
}

}  // namespace tnorm
