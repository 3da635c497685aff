#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcmcg {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  // Columns [first, first+count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  // Places `other` to the right (hconcat) or below (vconcat).
  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix vconcat(const IntMatrix& other) const;

  bool is_zero() const;
  // Reduce every entry into [0, m); m == 0 leaves the matrix unchanged.
  IntMatrix reduced_mod(const Int& m) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  // Lexicographic order on (rows, cols, entries); used to key group elements.
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Int& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Int& s) { return a *= s; }
  friend IntMatrix operator*(const Int& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator-(IntMatrix a) { return a *= Int(-1); }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);

  const std::vector<Int>& data() const { return data_; }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Matrix power with nonnegative exponent.
IntMatrix power(const IntMatrix& a, unsigned long exponent);

Int dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& v, const Int& s);
bool is_zero(const IntVector& v);

// Floor-style remainder in [0, |m|).
Int mod_nonneg(const Int& a, const Int& m);

}  // namespace hcmcg
