#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>

#include "tnorm/integer.hpp"

namespace tnorm {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) : coeffs_(make_vector(coeffs)) { trim(); }

  static IntPolynomial monomial(const Integer& c, std::size_t degree) {
    IntVector v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const IntVector& coeffs() const noexcept { return coeffs_; }

  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const {
    require(!is_zero(), ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  template <typename T>
  T evaluate(const T& x) const {
    T acc = T(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert<T>(*it);
    return acc;
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    IntVector d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntVector out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntVector out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntVector out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
    return IntPolynomial(scale(c, a.coeffs_));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "x^2 - 3*x + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      bool unit = mag == 1 && i > 0;
      if (!unit) out += mag.get_str();
      if (i > 0) {
        if (!unit) out += '*';
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out;
  }

 private:
  template <typename T>
  static T convert(const Integer& z) {
    if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
      return T(z);
    } else if constexpr (std::is_same_v<T, std::complex<long double>>) {
      return T(static_cast<long double>(z.get_d()), 0.0L);
    } else {
      return static_cast<T>(z.get_d());
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  IntVector coeffs_;
};

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Exact division by a monic polynomial; stays inside Z[x].
inline PolyDivision divmod_monic(const IntPolynomial& a, const IntPolynomial& divisor) {
  require(divisor.is_monic(), ErrorCode::NonMonic, "divisor " + divisor.to_string() + " is not monic");
  IntVector rem = a.coeffs();
  const int db = divisor.degree();
  if (a.degree() < db) return {IntPolynomial{}, a};
  IntVector quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Integer c = rem[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * divisor.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

}  // namespace tnorm
