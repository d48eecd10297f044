#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linrel/field.hpp"

namespace linrel {

using Vector = std::vector<Scalar>;

// Dense matrix over one FieldSpec. Desk-scale only; everything is exact.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_columns(const FieldSpec& f, std::size_t rows,
                             const std::vector<Vector>& columns);
  static Matrix from_rows(const FieldSpec& f, std::size_t cols,
                          const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector apply(const Vector& x) const;

  Matrix negated() const;
  Matrix transposed() const;
  // Rows [first, first+count).
  Matrix row_slice(std::size_t first, std::size_t count) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct EchelonResult {
  Matrix canonical;                    // zero columns removed, pivots normalised
  std::vector<std::size_t> pivot_rows; // strictly increasing, one per column
  std::size_t rank = 0;
};

// Canonical column-echelon form of the column span of M. Unique per span,
// so span equality is entrywise equality of canonical forms. Pivots are 1,
// sit at the first nonzero entry of their column scanning top-down, move
// strictly down across columns, and their rows vanish in all other columns.
EchelonResult column_echelon(const Matrix& m);

// Canonical basis of {v : Mv = 0}, as columns.
Matrix nullspace(const Matrix& m);

// Some x with Ax = b, or nothing when b is outside the column span.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace linrel
