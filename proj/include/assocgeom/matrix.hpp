#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assocgeom/field.hpp"

namespace asg {

/// Dense row-major matrix over an exact field. Operators act on column vectors.
template <FieldElement K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Row-major integer literals, reduced into `field`.
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                          std::initializer_list<std::int64_t> entries);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<K>>& rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<K> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const K> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<K> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  std::vector<K> col_vector(std::size_t c) const;

  std::span<const K> entries() const noexcept { return data_; }

  void append_row(std::span<const K> values);

  Matrix transpose() const;
  /// Rows [r0, r0 + count).
  Matrix row_block(std::size_t r0, std::size_t count) const;
  /// Columns [c0, c0 + count).
  Matrix col_block(std::size_t c0, std::size_t count) const;
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;

  /// M·v for a column vector v.
  std::vector<K> apply(std::span<const K> v) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b) { return a.combine(b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a.combine(b, true); }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return a.multiply(b); }
  friend Matrix operator*(const K& s, const Matrix& m) { return m.scaled(s); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// One line per row, entries separated by single spaces.
  std::string str() const;

 private:
  Matrix combine(const Matrix& other, bool subtract) const;
  Matrix multiply(const Matrix& other) const;
  Matrix scaled(const K& s) const;

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <FieldElement K>
struct Rref {
  Matrix<K> form;                   // zero rows removed
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Unique reduced row echelon form; zero rows dropped.
template <FieldElement K>
Rref<K> rref(const Matrix<K>& m);

template <FieldElement K>
std::size_t rank(const Matrix<K>& m);

/// Basis (as rows, in RREF) of {v : m·v = 0}.
template <FieldElement K>
Matrix<K> kernel(const Matrix<K>& m);

/// Some v with m·v = b, or nothing if the system is inconsistent.
template <FieldElement K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, std::span<const K> b);

template <FieldElement K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m);

/// True iff a = λ·b for some nonzero scalar λ (equality of projective classes).
template <FieldElement K>
bool proportional(const Matrix<K>& a, const Matrix<K>& b);

}  // namespace asg
