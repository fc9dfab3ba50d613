#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tnorm/integer.hpp"

namespace tnorm {

/// Square k x k matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t k) : k_(k), data_(k * k) {
    require(k > 0, ErrorCode::NotSquare, "matrix dimension must be positive");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(to_rows(rows)) {}

  explicit IntMatrix(const std::vector<IntVector>& rows) : k_(rows.size()) {
    require(k_ > 0, ErrorCode::NotSquare, "matrix has no rows");
    data_.reserve(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i) {
      require(rows[i].size() == k_, ErrorCode::NotSquare,
              "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                  std::to_string(k_));
      data_.insert(data_.end(), rows[i].begin(), rows[i].end());
    }
  }

  static IntMatrix identity(std::size_t k) {
    IntMatrix m(k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return k_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * k_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * k_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * k_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k_));
  }

  std::vector<IntVector> rows() const {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < k_; ++i) out.push_back(row(i));
    return out;
  }

  /// Entries flattened row by row.
  const IntVector& entries() const noexcept { return data_; }

  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < k_; ++i) t += (*this)(i, i);
    return t;
  }

  Integer entry_sum() const {
    Integer s = 0;
    for (const auto& x : data_) s += x;
    return s;
  }

  IntMatrix transpose() const {
    IntMatrix t(k_);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector apply(const IntVector& v) const {
    require(v.size() == k_, ErrorCode::DimensionMismatch,
            "vector of length " + std::to_string(v.size()) + " for a " + std::to_string(k_) + "x" +
                std::to_string(k_) + " matrix");
    IntVector out(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < k_; ++j) s += (*this)(i, j) * v[j];
      out[i] = std::move(s);
    }
    return out;
  }

  IntMatrix power(std::size_t n) const {
    IntMatrix result = identity(k_);
    IntMatrix base = *this;
    while (n) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n) base = base * base;
    }
    return result;
  }

  bool is_nonnegative() const {
    for (const auto& x : data_)
      if (x < 0) return false;
    return true;
  }

  bool is_positive() const {
    for (const auto& x : data_)
      if (x <= 0) return false;
    return true;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.k_ == b.k_, ErrorCode::DimensionMismatch, "matrix product of different sizes");
    IntMatrix c(a.k_);
    for (std::size_t i = 0; i < a.k_; ++i)
      for (std::size_t l = 0; l < a.k_; ++l) {
        const Integer& ail = a(i, l);
        if (ail == 0) continue;
        for (std::size_t j = 0; j < a.k_; ++j) c(i, j) += ail * b(l, j);
      }
    return c;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require(a.k_ == b.k_, ErrorCode::DimensionMismatch, "matrix sum of different sizes");
    IntMatrix c(a.k_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  friend IntMatrix operator*(const Integer& s, const IntMatrix& a) {
    IntMatrix c(a.k_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.k_ == b.k_ && a.data_ == b.data_; }

  /// Bracket form used by the input grammar, e.g. "[[2,1],[1,1]]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < k_; ++i) {
      if (i) out += ',';
      out += format_list(row(i));
    }
    out += ']';
    return out;
  }

 private:
  static std::vector<IntVector> to_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> out;
    for (const auto& r : rows) out.push_back(make_vector(r));
    return out;
  }

  std::size_t k_;
  IntVector data_;
};

}  // namespace tnorm
