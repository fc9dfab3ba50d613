#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tnorm/charpoly.hpp"
#include "tnorm/roots.hpp"

namespace tnorm {

/// Wielandt's bound (k-1)^2 + 1 on the exponent of a primitive k x k matrix.
constexpr std::size_t wielandt_bound(std::size_t k) noexcept { return (k - 1) * (k - 1) + 1; }

/// Smallest m with A^m entrywise positive, or nullopt when A is not primitive.
/// Works on the zero pattern only, so entry size never matters.
inline std::optional<std::size_t> primitivity_check(const IntMatrix& a) {
  require(a.is_nonnegative(), ErrorCode::NotNonnegative, "matrix " + a.to_string() + " has a negative entry");
  const std::size_t k = a.size();
  std::vector<char> base(k * k), cur(k * k);
  for (std::size_t i = 0; i < k * k; ++i) base[i] = cur[i] = a.entries()[i] > 0;
  auto all_set = [](const std::vector<char>& p) {
    for (char c : p)
      if (!c) return false;
    return true;
  };
  for (std::size_t m = 1; m <= wielandt_bound(k); ++m) {
    if (all_set(cur)) return m;
    std::vector<char> next(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (cur[i * k + l])
          for (std::size_t j = 0; j < k; ++j) next[i * k + j] |= base[l * k + j];
    cur = std::move(next);
  }
  return std::nullopt;
}

inline std::size_t require_primitive(const IntMatrix& a) {
  auto m = primitivity_check(a);
  if (!m) throw Error(ErrorCode::NotPrimitive, "matrix " + a.to_string() + " is not primitive");
  return *m;
}

struct PerronData {
  double lambda = 0;
  std::vector<double> right_vec;  // L1-normalized, entrywise positive
  std::vector<double> left_vec;   // L1-normalized, entrywise positive
  double gap = 0;                 // |lambda_2| / lambda
  std::size_t primitivity_witness = 0;
  std::size_t iterations = 0;
};

inline constexpr double kDefaultPerronTol = 1e-12;
inline constexpr std::size_t kDefaultMaxIter = 100000;

namespace detail {

struct PowerIteration {
  long double rayleigh;
  std::vector<long double> vec;
  std::size_t iterations;
};

inline PowerIteration power_iterate(const IntMatrix& a, long double tol, std::size_t max_iter) {
  const std::size_t k = a.size();
  std::vector<long double> m(k * k);
  for (std::size_t i = 0; i < k * k; ++i) m[i] = static_cast<long double>(a.entries()[i].get_d());
  std::vector<long double> x(k, 1.0L / static_cast<long double>(k));
  long double prev = -1;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    std::vector<long double> y(k, 0.0L);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) y[i] += m[i * k + j] * x[j];
    long double norm = 0;
    for (auto v : y) norm += v;  // x is positive and L1-normalized, so this is |Ax|_1 / |x|_1
    long double moved = 0;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] /= norm;
      moved += std::fabs(y[i] - x[i]);
    }
    x = std::move(y);
    // The quotient alone can repeat by accident while x is still far from the
    // Perron direction, so the iterate must settle as well. Both thresholds
    // are floored at rounding level.
    const long double floor = 16 * std::numeric_limits<long double>::epsilon() * std::max(1.0L, norm);
    if (std::fabs(norm - prev) < std::max(tol, floor) && moved < std::max(tol, floor)) return {norm, x, it};
    prev = norm;
  }
  throw Error(ErrorCode::NoConvergence, "power iteration did not converge in " + std::to_string(max_iter) + " steps");
}

}  // namespace detail

/// Perron-Frobenius eigendata of a primitive matrix by power iteration on A
/// and its transpose from the all-ones seed. The eigenvalue is then polished
/// by Newton steps on the exact characteristic polynomial.
inline PerronData perron_data(const IntMatrix& a, double tol = kDefaultPerronTol,
                              std::size_t max_iter = kDefaultMaxIter) {
  PerronData out;
  out.primitivity_witness = require_primitive(a);
  require(tol > 0, ErrorCode::InvalidArgument, "tolerance must be positive");

  auto right = detail::power_iterate(a, tol, max_iter);
  auto left = detail::power_iterate(a.transpose(), tol, max_iter);
  out.iterations = std::max(right.iterations, left.iterations);

  const IntPolynomial chi = char_poly(a);
  const IntPolynomial dchi = chi.derivative();
  long double lam = right.rayleigh;
  for (int step = 0; step < 8; ++step) {
    long double d = dchi.evaluate(lam);
    if (d == 0) break;
    long double next = lam - chi.evaluate(lam) / d;
    if (!(std::fabs(next - right.rayleigh) < 1e-6L * std::max(1.0L, right.rayleigh))) break;
    lam = next;
  }
  out.lambda = static_cast<double>(lam);
  for (auto v : right.vec) out.right_vec.push_back(static_cast<double>(v));
  for (auto v : left.vec) out.left_vec.push_back(static_cast<double>(v));

  if (a.size() > 1) {
    auto roots = complex_roots(chi);
    std::size_t self = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
      if (std::abs(roots[i] - lam) < std::abs(roots[self] - lam)) self = i;
    long double second = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (i != self) second = std::max(second, std::abs(roots[i]));
    out.gap = static_cast<double>(second / lam);
  }
  return out;
}

struct PositivitySign {
  enum class Kind { Positive, Negative, Zero, Undecided };
  Kind kind = Kind::Undecided;
  /// Positive: smallest m with A^m v >= 1 entrywise. Negative: smallest m with
  /// A^m v <= -1 entrywise. Undecided: the exhausted iteration bound.
  std::size_t witness = 0;

  friend bool operator==(const PositivitySign&, const PositivitySign&) = default;
};

constexpr std::string_view sign_name(PositivitySign::Kind k) noexcept {
  switch (k) {
    case PositivitySign::Kind::Positive: return "Positive";
    case PositivitySign::Kind::Negative: return "Negative";
    case PositivitySign::Kind::Zero: return "Zero";
    case PositivitySign::Kind::Undecided: return "Undecided";
  }
  return "Unknown";
}

inline constexpr double kSignTolerance = 1e-9;
inline constexpr std::size_t kExactFallbackBound = 64;

/// Sign of v in the stationary dimension group of A. The left Perron vector
/// only chooses which exact search to run; the returned witness is always an
/// exactly verified power of A.
inline PositivitySign eventual_positivity(const IntMatrix& a, const PerronData& data, const IntVector& v) {
  using Kind = PositivitySign::Kind;
  require(v.size() == a.size(), ErrorCode::DimensionMismatch,
          "vector of length " + std::to_string(v.size()) + " for dimension " + std::to_string(a.size()));
  if (is_zero(v)) return {Kind::Zero, 0};

  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += data.left_vec[i] * v[i].get_d();

  auto search = [&](bool positive, std::size_t bound) -> std::optional<std::size_t> {
    IntVector w = v;
    for (std::size_t m = 0; m <= bound; ++m) {
      if (positive ? all_positive(w) : all_negative(w)) return m;
      w = a.apply(w);
    }
    return std::nullopt;
  };

  if (s > kSignTolerance || s < -kSignTolerance) {
    const bool positive = s > 0;
    if (auto m = search(positive, kDefaultMaxIter)) return {positive ? Kind::Positive : Kind::Negative, *m};
    return {Kind::Undecided, kDefaultMaxIter};
  }

  IntVector w = v;
  for (std::size_t m = 0; m <= kExactFallbackBound; ++m) {
    if (all_positive(w)) return {Kind::Positive, m};
    if (all_negative(w)) return {Kind::Negative, m};
    if (is_zero(w)) return {Kind::Zero, 0};
    w = a.apply(w);
  }
  return {Kind::Undecided, kExactFallbackBound};
}

inline PositivitySign eventual_positivity(const IntMatrix& a, const IntVector& v) {
  require(v.size() == a.size(), ErrorCode::DimensionMismatch, "vector length differs from matrix dimension");
  return eventual_positivity(a, perron_data(a), v);
}

}  // namespace tnorm
