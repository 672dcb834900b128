// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact rational numbers and a small dense matrix template.
//
// All game data and all polyhedral computations use `Rational`, an
// arbitrary-precision fraction that is always kept in lowest terms.

#ifndef XEQ_RATIONAL_H_
#define XEQ_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "xeq/errors.h"

namespace xeq {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);

// Parses "p/q", an integer, or a decimal literal such as "-0.125" or
// "2.5e-3" into an exact rational. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

// Exact value of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

// Converts a double through its shortest round-trip decimal representation,
// so 0.1 becomes 1/10 rather than the dyadic neighbour.
Rational rational_from_decimal_double(double value);

// Best rational approximation with denominator <= max_den (continued
// fractions).
Rational approximate_rational(double value, long max_den);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_,
                          data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

RealMatrix to_real(const RationalMatrix& m);
std::vector<double> to_real(const RationalVector& v);

// Sum of all entries.
Rational total(const RationalMatrix& m);
Rational total(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace xeq

#endif  // XEQ_RATIONAL_H_
