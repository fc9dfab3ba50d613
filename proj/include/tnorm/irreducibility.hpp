#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "tnorm/finite_field.hpp"

namespace tnorm {

enum class Irreducibility { Irreducible, Reducible, Undecided };

constexpr std::string_view status_name(Irreducibility s) noexcept {
  switch (s) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::Undecided: return "Undecided";
  }
  return "Unknown";
}

struct IrreducibilityCertificate {
  Irreducibility status = Irreducibility::Undecided;
  std::optional<std::uint64_t> witness_prime;
  /// Full degree for Irreducible; degrees of the exact split for Reducible.
  std::optional<std::vector<std::size_t>> factor_degrees;
  /// A proper monic factor over Z, present iff Reducible.
  std::optional<IntPolynomial> factor;
};

inline constexpr std::size_t kDefaultPrimeBudget = 10;
inline constexpr int kMaxSearchDegree = 8;

namespace detail {

/// Degrees of the proper factors compatible with one mod-q factorization.
inline std::set<std::size_t> subset_sums(const std::vector<std::size_t>& parts, std::size_t total) {
  std::vector<bool> reach(total + 1, false);
  reach[0] = true;
  for (auto d : parts)
    for (std::size_t s = total; s >= d; --s)
      if (reach[s - d]) reach[s] = true;
  std::set<std::size_t> out;
  for (std::size_t s = 1; s < total; ++s)
    if (reach[s]) out.insert(s);
  return out;
}

// Positive divisors of |n| by trial division; empty when |n| is too large to factor this way.
inline std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  if (m == 0 || m > Integer("1000000000000")) return {};
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : primes) {
    std::size_t n0 = out.size();
    Integer pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < n0; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool divides(const IntPolynomial& g, const IntPolynomial& f) {
  return divmod_monic(f, g).remainder.is_zero();
}

/// Kronecker search for a monic integer factor of exact degree d.
inline std::optional<IntPolynomial> find_factor_of_degree(const IntPolynomial& f, std::size_t d) {
  constexpr std::size_t kMaxCombinations = 2'000'000;

  std::vector<std::pair<Integer, Integer>> pts;  // (x, f(x)), sorted by |f(x)|
  for (long x = -12; x <= 12; ++x) {
    Integer fx = f.evaluate(Integer(x));
    if (fx == 0) return IntPolynomial{-x, 1};
    pts.emplace_back(Integer(x), fx);
  }
  if (d == 0) return std::nullopt;
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return abs(a.second) < abs(b.second); });
  pts.resize(d);

  // Monic g of degree d is fixed by its values at d points.
  std::vector<std::vector<Integer>> choices;
  std::size_t combos = 1;
  for (const auto& [x, fx] : pts) {
    auto divs = divisors(fx);
    if (divs.empty()) return std::nullopt;
    std::vector<Integer> signed_divs;
    for (const auto& dv : divs) {
      signed_divs.push_back(dv);
      signed_divs.push_back(-dv);
    }
    combos *= signed_divs.size();
    if (combos > kMaxCombinations) return std::nullopt;
    choices.push_back(std::move(signed_divs));
  }

  std::vector<std::size_t> idx(d, 0);
  while (true) {
    // Interpolate h = g - x^d of degree < d through (x_i, value_i - x_i^d).
    std::vector<Rational> h(d);
    for (std::size_t i = 0; i < d; ++i) {
      Integer xd;
      mpz_pow_ui(xd.get_mpz_t(), pts[i].first.get_mpz_t(), static_cast<unsigned long>(d));
      Rational yi = Rational(choices[i][idx[i]] - xd);
      std::vector<Rational> basis{Rational(1)};
      Rational denom = 1;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        std::vector<Rational> next(basis.size() + 1);
        for (std::size_t t = 0; t < basis.size(); ++t) {
          next[t + 1] += basis[t];
          next[t] -= basis[t] * Rational(pts[j].first);
        }
        basis = std::move(next);
        denom *= Rational(pts[i].first - pts[j].first);
      }
      for (std::size_t t = 0; t < basis.size(); ++t) h[t] += yi * basis[t] / denom;
    }
    bool integral = true;
    IntVector coeffs(d + 1);
    for (std::size_t t = 0; t < d && integral; ++t) {
      h[t].canonicalize();
      if (h[t].get_den() != 1) integral = false;
      else coeffs[t] = h[t].get_num();
    }
    if (integral) {
      coeffs[d] = 1;
      IntPolynomial g(std::move(coeffs));
      if (divides(g, f)) return g;
    }
    std::size_t pos = 0;
    while (pos < d && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == d) break;
  }
  return std::nullopt;
}

}  // namespace detail

/// Certifies irreducibility over Q of a monic integer polynomial.
///
/// A single reduction prime at which p stays irreducible of full degree is a
/// proof. Otherwise the factor degrees allowed by every tried prime are
/// intersected; if any proper degree survives and deg p <= 8, a bounded
/// Kronecker search looks for an exact factor. Failing both, Undecided.
inline IrreducibilityCertificate irreducibility_certificate(const IntPolynomial& p,
                                                            std::size_t prime_budget = kDefaultPrimeBudget) {
  require(p.is_monic(), ErrorCode::NonMonic, p.to_string() + " is not monic");
  require(p.degree() >= 1, ErrorCode::InvalidArgument, "degree must be at least 1");
  require(prime_budget >= 1, ErrorCode::InvalidArgument, "prime budget must be at least 1");
  const auto n = static_cast<std::size_t>(p.degree());

  IrreducibilityCertificate cert;
  std::set<std::size_t> possible;
  for (std::size_t d = 1; d < n; ++d) possible.insert(d);
  for (auto q : first_primes(prime_budget)) {
    auto degrees = factor_mod_p(p, q);
    if (degrees.size() == 1) {
      cert.status = Irreducibility::Irreducible;
      cert.witness_prime = q;
      cert.factor_degrees = std::move(degrees);
      return cert;
    }
    std::set<std::size_t> here = detail::subset_sums(degrees, n);
    std::set<std::size_t> both;
    std::set_intersection(possible.begin(), possible.end(), here.begin(), here.end(),
                          std::inserter(both, both.begin()));
    possible = std::move(both);
  }

  if (possible.empty() || p.degree() > kMaxSearchDegree) return cert;
  for (auto d : possible) {
    if (2 * d > n) break;
    if (auto g = detail::find_factor_of_degree(p, d)) {
      cert.status = Irreducibility::Reducible;
      auto g_deg = static_cast<std::size_t>(g->degree());
      cert.factor_degrees = std::vector<std::size_t>{std::min(g_deg, n - g_deg), std::max(g_deg, n - g_deg)};
      cert.factor = std::move(*g);
      return cert;
    }
  }
  return cert;
}

}  // namespace tnorm
