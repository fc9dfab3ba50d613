#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "tnorm/error.hpp"

namespace tnorm {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

inline IntVector make_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

inline std::string format_list(const IntVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  out += ']';
  return out;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch,
          "vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector addition");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IntVector subtract(const IntVector& a, const IntVector& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector subtraction");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IntVector scale(const Integer& c, const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool all_positive(const IntVector& v) {
  for (const auto& x : v)
    if (x <= 0) return false;
  return !v.empty();
}

inline bool all_negative(const IntVector& v) {
  for (const auto& x : v)
    if (x >= 0) return false;
  return !v.empty();
}

}  // namespace tnorm
