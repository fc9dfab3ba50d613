#pragma once

#include <cstddef>
#include <vector>

#include "tnorm/matrix.hpp"
#include "tnorm/polynomial.hpp"

namespace tnorm {

/// det(xI - A) by Faddeev-LeVerrier. Each division by m is exact over Z, so no
/// rationals appear; a nonzero remainder would mean corrupted arithmetic.
inline IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t k = a.size();
  IntVector c(k + 1);
  c[k] = 1;
  IntMatrix m(k);  // M_0 = 0
  for (std::size_t step = 1; step <= k; ++step) {
    m = a * m;
    for (std::size_t i = 0; i < k; ++i) m(i, i) += c[k - step + 1];
    Integer t = (a * m).trace();
    Integer q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), step);
    require(r == 0, ErrorCode::InvalidArgument, "inexact Faddeev-LeVerrier step");
    c[k - step] = -q;
  }
  return IntPolynomial(std::move(c));
}

/// p(A) by Horner's rule.
inline IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& a) {
  IntMatrix acc(a.size());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    for (std::size_t d = 0; d < a.size(); ++d) acc(d, d) += p.coeffs()[static_cast<std::size_t>(i)];
  }
  return acc;
}

/// Monic minimal polynomial over Q: the first power A^d that is a rational
/// combination of I, A, ..., A^{d-1}. Gauss's lemma keeps the result in Z[x].
inline IntPolynomial matrix_min_poly(const IntMatrix& a) {
  const std::size_t k = a.size();
  const std::size_t n = k * k;

  struct Reduced {
    std::vector<Rational> vec;
    std::vector<Rational> combo;  // vec = sum combo[j] * vec(A^j)
    std::size_t pivot;
  };
  std::vector<Reduced> basis;

  IntMatrix power = IntMatrix::identity(k);
  for (std::size_t d = 0; d <= k; ++d) {
    std::vector<Rational> vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = power.entries()[i];
    std::vector<Rational> combo(d + 1);
    combo[d] = 1;

    for (const auto& b : basis) {
      if (vec[b.pivot] == 0) continue;
      Rational f = vec[b.pivot] / b.vec[b.pivot];
      for (std::size_t i = 0; i < n; ++i) vec[i] -= f * b.vec[i];
      for (std::size_t j = 0; j < b.combo.size(); ++j) combo[j] -= f * b.combo[j];
    }

    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (vec[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      IntVector coeffs(d + 1);
      for (std::size_t j = 0; j <= d; ++j) {
        require(combo[j].get_den() == 1, ErrorCode::InvalidArgument, "non-integral minimal polynomial");
        coeffs[j] = combo[j].get_num();
      }
      return IntPolynomial(std::move(coeffs));
    }
    basis.push_back({std::move(vec), std::move(combo), pivot});
    power = power * a;
  }
  // Cayley-Hamilton guarantees a dependence by degree k.
  throw Error(ErrorCode::InvalidArgument, "no dependence among matrix powers");
}

/// Newton power sums p_0..p_J of the roots of a monic polynomial.
inline IntVector newton_power_sums(const IntPolynomial& p, std::size_t max_power) {
  require(p.is_monic(), ErrorCode::NonMonic, p.to_string() + " is not monic");
  require(p.degree() >= 1, ErrorCode::InvalidArgument, "power sums need degree >= 1");
  const auto k = static_cast<std::size_t>(p.degree());
  const IntVector& c = p.coeffs();
  IntVector sums(max_power + 1);
  sums[0] = static_cast<unsigned long>(k);
  for (std::size_t j = 1; j <= max_power; ++j) {
    Integer s = 0;
    for (std::size_t i = 1; i <= std::min(j - 1, k); ++i) s += c[k - i] * sums[j - i];
    if (j <= k) s += c[k - j] * static_cast<unsigned long>(j);
    sums[j] = -s;
  }
  return sums;
}

}  // namespace tnorm
