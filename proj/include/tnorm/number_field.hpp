#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "tnorm/charpoly.hpp"
#include "tnorm/irreducibility.hpp"
#include "tnorm/roots.hpp"

namespace tnorm {

/// Coordinates of an element of Z[lambda] in the power basis 1, lambda, ..., lambda^{k-1}.
struct OrderElement {
  IntVector coords;

  friend bool operator==(const OrderElement&, const OrderElement&) = default;
};

/// The order Z[lambda] inside K = Q(lambda), lambda a root of an irreducible
/// monic integer polynomial of degree k >= 2. Only build_order and
/// make_order construct it, and both demand an Irreducible certificate.
class NumberFieldOrder {
 public:
  const IntPolynomial& min_poly() const noexcept { return min_poly_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(min_poly_.degree()); }
  const IrreducibilityCertificate& certificate() const noexcept { return certificate_; }

  OrderElement one() const { return basis(0); }

  /// The basis element lambda^j.
  OrderElement basis(std::size_t j) const {
    require(j < degree(), ErrorCode::DimensionMismatch, "basis index out of range");
    OrderElement e{IntVector(degree())};
    e.coords[j] = 1;
    return e;
  }

  void check(const OrderElement& a) const {
    require(a.coords.size() == degree(), ErrorCode::DimensionMismatch,
            "element has " + std::to_string(a.coords.size()) + " coordinates, order has degree " +
                std::to_string(degree()));
  }

  /// Product in Z[lambda], reduced modulo the minimal polynomial.
  OrderElement multiply(const OrderElement& a, const OrderElement& b) const {
    check(a);
    check(b);
    IntPolynomial prod = IntPolynomial(a.coords) * IntPolynomial(b.coords);
    return reduce(prod);
  }

  OrderElement reduce(const IntPolynomial& p) const {
    IntPolynomial r = divmod_monic(p, min_poly_).remainder;
    OrderElement e{IntVector(degree())};
    for (std::size_t i = 0; i < degree(); ++i) e.coords[i] = r.coeff(i);
    return e;
  }

  friend NumberFieldOrder make_order(const IntPolynomial& p, std::size_t prime_budget);

 private:
  NumberFieldOrder(IntPolynomial p, IrreducibilityCertificate cert)
      : min_poly_(std::move(p)), certificate_(std::move(cert)) {}

  IntPolynomial min_poly_;
  IrreducibilityCertificate certificate_;
};

inline NumberFieldOrder make_order(const IntPolynomial& p, std::size_t prime_budget = kDefaultPrimeBudget) {
  require(p.is_monic(), ErrorCode::NonMonic, p.to_string() + " is not monic");
  if (p.degree() < 2) throw Error(ErrorCode::DegenerateMonodromy, "field degree " + std::to_string(p.degree()) + " < 2");
  auto cert = irreducibility_certificate(p, prime_budget);
  switch (cert.status) {
    case Irreducibility::Irreducible: break;
    case Irreducibility::Reducible:
      throw Error(ErrorCode::NotAField, p.to_string() + " has the factor " + cert.factor->to_string());
    case Irreducibility::Undecided:
      throw Error(ErrorCode::IrreducibilityUnverified,
                  "no certificate for " + p.to_string() + " within " + std::to_string(prime_budget) + " primes");
  }
  return NumberFieldOrder(p, std::move(cert));
}

/// Z[lambda_A] for an integer matrix whose characteristic polynomial is its
/// minimal polynomial and is irreducible.
inline NumberFieldOrder build_order(const IntMatrix& a, std::size_t prime_budget = kDefaultPrimeBudget) {
  IntPolynomial chi = char_poly(a);
  IntPolynomial mu = matrix_min_poly(a);
  if (!(chi == mu))
    throw Error(ErrorCode::DegenerateMonodromy,
                "minimal polynomial " + mu.to_string() + " differs from characteristic polynomial " + chi.to_string());
  return make_order(chi, prime_budget);
}

/// Row i holds the coordinates of a * lambda^i.
inline IntMatrix mult_matrix(const NumberFieldOrder& order, const OrderElement& a) {
  order.check(a);
  const std::size_t k = order.degree();
  IntMatrix m(k);
  IntPolynomial shifted(a.coords);
  const IntPolynomial x{0, 1};
  for (std::size_t i = 0; i < k; ++i) {
    OrderElement row = order.reduce(shifted);
    for (std::size_t j = 0; j < k; ++j) m(i, j) = row.coords[j];
    shifted = IntPolynomial(row.coords) * x;
  }
  return m;
}

inline Integer trace_via_mult(const NumberFieldOrder& order, const OrderElement& a) {
  return mult_matrix(order, a).trace();
}

/// t_j = tr(lambda^{j}) for j = 0..k-1; the trace form on the power basis.
struct TraceFunctional {
  IntVector t;

  std::size_t size() const noexcept { return t.size(); }
  friend bool operator==(const TraceFunctional&, const TraceFunctional&) = default;
};

inline TraceFunctional trace_functional(const NumberFieldOrder& order) {
  IntVector sums = newton_power_sums(order.min_poly(), order.degree() - 1);
  return TraceFunctional{std::move(sums)};
}

inline Integer norm_value(const TraceFunctional& f, const IntVector& z) {
  require(z.size() == f.size(), ErrorCode::DimensionMismatch,
          "class of length " + std::to_string(z.size()) + " for a functional of length " + std::to_string(f.size()));
  return dot(f.t, z);
}

inline Integer trace_via_newton(const NumberFieldOrder& order, const OrderElement& a) {
  order.check(a);
  return norm_value(trace_functional(order), a.coords);
}

inline constexpr double kDefaultEmbeddingTol = 1e-8;

/// Sum of the coordinate polynomial over all complex roots of the minimal
/// polynomial, rounded to the nearest integer.
inline Integer trace_via_embeddings(const NumberFieldOrder& order, const OrderElement& a,
                                    double tol = kDefaultEmbeddingTol) {
  order.check(a);
  const IntPolynomial coord_poly(a.coords);
  Complex sum = 0;
  for (const auto& root : complex_roots(order.min_poly())) sum += coord_poly.evaluate(root);
  long double nearest = std::round(sum.real());
  long double err = std::hypot(sum.real() - nearest, sum.imag());
  if (!(err <= tol))
    throw Error(ErrorCode::EmbeddingMismatch, "embedding sum is " + std::to_string(static_cast<double>(err)) +
                                                  " away from an integer");
  Integer out;
  mpz_set_d(out.get_mpz_t(), static_cast<double>(nearest));
  return out;
}

}  // namespace tnorm
