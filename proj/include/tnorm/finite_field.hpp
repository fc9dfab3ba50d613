#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tnorm/polynomial.hpp"

namespace tnorm {

/// The first n primes, in increasing order.
inline std::vector<std::uint64_t> first_primes(std::size_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; primes.size() < n; ++c) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

namespace gf {

using Word = std::uint64_t;
using Poly = std::vector<Word>;  // ascending, trimmed

/// Arithmetic in F_q[x] for a word-sized prime q.
class Field {
 public:
  explicit Field(Word q) : q_(q) {}

  Word modulus() const noexcept { return q_; }

  Word mul(Word a, Word b) const { return static_cast<Word>((static_cast<unsigned __int128>(a) * b) % q_); }
  Word add(Word a, Word b) const { return (a + b) % q_; }
  Word sub(Word a, Word b) const { return (a + q_ - b) % q_; }

  Word pow(Word a, Word e) const {
    Word r = 1 % q_;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }

  Word inv(Word a) const { return pow(a, q_ - 2); }

  static void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }

  static int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

  Poly reduce(const IntPolynomial& f) const {
    Poly out(f.coeffs().size());
    mpz_class qz(static_cast<unsigned long>(q_));
    for (std::size_t i = 0; i < out.size(); ++i) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), qz.get_mpz_t());
      out[i] = r.get_ui();
    }
    trim(out);
    return out;
  }

  Poly monic(Poly p) const {
    if (p.empty()) return p;
    Word li = inv(p.back());
    for (auto& c : p) c = mul(c, li);
    return p;
  }

  Poly sub(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    trim(out);
    return out;
  }

  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    const int db = degree(b);
    if (degree(a) < db) return {Poly{}, a};
    Word li = inv(b.back());
    Poly quot(static_cast<std::size_t>(degree(a) - db + 1));
    for (int i = degree(a); i >= db; --i) {
      Word c = mul(a[static_cast<std::size_t>(i)], li);
      quot[static_cast<std::size_t>(i - db)] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) {
        auto idx = static_cast<std::size_t>(i - db + j);
        a[idx] = sub(a[idx], mul(c, b[static_cast<std::size_t>(j)]));
      }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(quot);
    return {quot, a};
  }

  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  Poly quo(const Poly& a, const Poly& b) const { return divmod(a, b).first; }

  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  Poly derivative(const Poly& p) const {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = mul(p[i], static_cast<Word>(i % q_));
    trim(d);
    return d;
  }

  /// base^e mod m.
  Poly powmod(Poly base, Word e, const Poly& m) const {
    Poly result{1};
    result = rem(result, m);
    base = rem(base, m);
    while (e) {
      if (e & 1U) result = rem(mul(result, base), m);
      e >>= 1U;
      if (e) base = rem(mul(base, base), m);
    }
    return result;
  }

  /// q-th root of a polynomial whose derivative vanishes: f(x) = g(x^q) = g(x)^q.
  Poly qth_root(const Poly& p) const {
    Poly out;
    for (std::size_t i = 0; i < p.size(); i += static_cast<std::size_t>(q_)) out.push_back(p[i]);
    trim(out);
    return out;
  }

 private:
  Word q_;
};

struct Multiplicity {
  Poly factor;
  std::size_t power;
};

/// Square-free decomposition f = prod factor^power of a monic f.
inline std::vector<Multiplicity> squarefree(const Field& fld, const Poly& f) {
  std::vector<Multiplicity> out;
  if (Field::degree(f) < 1) return out;
  Poly df = fld.derivative(f);
  if (df.empty()) {
    for (auto& m : squarefree(fld, fld.qth_root(f))) out.push_back({m.factor, m.power * fld.modulus()});
    return out;
  }
  Poly c = fld.gcd(f, df);
  Poly w = fld.quo(f, c);
  std::size_t i = 1;
  while (Field::degree(w) > 0) {
    Poly y = fld.gcd(w, c);
    Poly fac = fld.quo(w, y);
    if (Field::degree(fac) > 0) out.push_back({fld.monic(fac), i});
    w = std::move(y);
    c = fld.quo(c, w);
    ++i;
  }
  if (Field::degree(c) > 0)
    for (auto& m : squarefree(fld, fld.qth_root(c))) out.push_back({m.factor, m.power * fld.modulus()});
  return out;
}

/// Distinct-degree split of a square-free monic f; returns (degree, count) pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> distinct_degree(const Field& fld, Poly f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const Poly x{0, 1};
  Poly h = fld.rem(x, f);
  std::size_t d = 1;
  while (Field::degree(f) >= static_cast<int>(2 * d)) {
    h = fld.powmod(h, fld.modulus(), f);
    Poly g = fld.gcd(f, fld.sub(h, x));
    if (Field::degree(g) > 0) {
      out.emplace_back(d, static_cast<std::size_t>(Field::degree(g)) / d);
      f = fld.quo(f, g);
      h = fld.rem(h, f);
    }
    ++d;
  }
  if (Field::degree(f) > 0) out.emplace_back(static_cast<std::size_t>(Field::degree(f)), 1);
  return out;
}

}  // namespace gf

/// Degrees, with multiplicity and in ascending order, of the irreducible
/// factors of p reduced modulo the prime q.
inline std::vector<std::size_t> factor_mod_p(const IntPolynomial& p, std::uint64_t q) {
  require(q >= 2 && q < (1ULL << 32), ErrorCode::InvalidArgument, "reduction prime out of range");
  require(!p.is_zero(), ErrorCode::InvalidArgument, "zero polynomial");
  if (mpz_divisible_ui_p(p.leading().get_mpz_t(), static_cast<unsigned long>(q)))
    throw Error(ErrorCode::BadReductionPrime,
                "leading coefficient of " + p.to_string() + " vanishes mod " + std::to_string(q));
  gf::Field fld(q);
  gf::Poly f = fld.monic(fld.reduce(p));
  std::vector<std::size_t> degrees;
  for (const auto& [factor, power] : gf::squarefree(fld, f))
    for (const auto& [deg, count] : gf::distinct_degree(fld, factor))
      degrees.insert(degrees.end(), count * power, deg);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace tnorm
