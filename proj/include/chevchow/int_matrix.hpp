#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "chevchow/numeric.hpp"

namespace chevchow {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Linear maps act on column vectors, so a map Z^n -> Z^m is an m x n
/// matrix. Lattice bases and relation lists are stored one vector per row.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<BigInt>& data() const { return data_; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;

  bool operator==(const IntMatrix& rhs) const = default;
  auto operator<=>(const IntMatrix& rhs) const = default;

  bool is_zero() const;
  bool is_identity() const;

  /// Vertical concatenation; column counts must agree.
  IntMatrix stack(const IntMatrix& below) const;
  /// Horizontal concatenation; row counts must agree.
  IntMatrix augment(const IntMatrix& right) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Determinant of a square matrix (Bareiss fraction-free elimination).
BigInt determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

}  // namespace chevchow
