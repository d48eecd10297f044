#include "linrel/matrix.hpp"

#include <algorithm>

#include "linrel/error.hpp"

namespace linrel {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      require(columns[j][i].field() == f, "column entry from a different field");
      m.at(i, j) = columns[j][i];
    }
  }
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  require(x.size() == cols_, "vector length mismatch");
  Vector y(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::negated() const {
  Matrix m(*this);
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::row_slice(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, "row slice out of range");
  Matrix m(field_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(first + i, j);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.field_ == b.field_, "hstack shape mismatch");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.cols_ && a.field_ == b.field_, "vstack shape mismatch");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i) m.at(a.rows_ + i, j) = b.at(i, j);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_ && a.field_ == b.field_, "matrix product shape mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_,
          "matrix sum shape mismatch");
  Matrix m(a);
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.negated(); }

namespace {

// In-place column elimination over rows [0, pivot_rows_limit) of `w`,
// applying every column operation to the full height of `w`. Pivot search
// is first-nonzero top-down, columns left-to-right; deterministic.
struct Elimination {
  std::vector<std::size_t> pivot_rows;
  std::size_t lead = 0;  // columns [0, lead) hold pivots afterwards
};

Elimination eliminate_columns(Matrix& w, std::size_t pivot_rows_limit) {
  Elimination e;
  const std::size_t cols = w.cols();
  for (std::size_t r = 0; r < pivot_rows_limit && e.lead < cols; ++r) {
    std::size_t j = e.lead;
    while (j < cols && w.at(r, j).is_zero()) ++j;
    if (j == cols) continue;
    if (j != e.lead)
      for (std::size_t i = 0; i < w.rows(); ++i) std::swap(w.at(i, e.lead), w.at(i, j));
    Scalar piv_inv = w.at(r, e.lead).inv();
    for (std::size_t i = 0; i < w.rows(); ++i) w.at(i, e.lead) *= piv_inv;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == e.lead || w.at(r, c).is_zero()) continue;
      Scalar factor = w.at(r, c);
      for (std::size_t i = 0; i < w.rows(); ++i)
        w.at(i, c) -= factor * w.at(i, e.lead);
    }
    e.pivot_rows.push_back(r);
    ++e.lead;
  }
  return e;
}

}  // namespace

EchelonResult column_echelon(const Matrix& m) {
  Matrix w(m);
  Elimination e = eliminate_columns(w, m.rows());
  Matrix canonical(m.field(), m.rows(), e.lead);
  for (std::size_t j = 0; j < e.lead; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) canonical.at(i, j) = w.at(i, j);
  return EchelonResult{std::move(canonical), std::move(e.pivot_rows), e.lead};
}

Matrix nullspace(const Matrix& m) {
  // Column-reduce [M; I]; columns whose M-part vanished carry a kernel basis.
  Matrix w = Matrix::vstack(m, Matrix::identity(m.field(), m.cols()));
  Elimination e = eliminate_columns(w, m.rows());
  std::vector<Vector> kernel;
  for (std::size_t j = e.lead; j < m.cols(); ++j) {
    Vector v;
    v.reserve(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) v.push_back(w.at(m.rows() + i, j));
    kernel.push_back(std::move(v));
  }
  Matrix basis = Matrix::from_columns(m.field(), m.cols(), kernel);
  return column_echelon(basis).canonical;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  require(b.size() == a.rows(), "right-hand side length mismatch");
  // Row-reduce the augmented system; free variables are set to zero.
  Matrix w = Matrix::hstack(a, Matrix::from_columns(a.field(), a.rows(), {b}));
  const std::size_t n = a.cols();
  std::vector<std::ptrdiff_t> pivot_col_of_row(w.rows(), -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < w.rows(); ++col) {
    std::size_t r = row;
    while (r < w.rows() && w.at(r, col).is_zero()) ++r;
    if (r == w.rows()) continue;
    if (r != row)
      for (std::size_t j = 0; j <= n; ++j) std::swap(w.at(row, j), w.at(r, j));
    Scalar inv = w.at(row, col).inv();
    for (std::size_t j = 0; j <= n; ++j) w.at(row, j) *= inv;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == row || w.at(i, col).is_zero()) continue;
      Scalar f = w.at(i, col);
      for (std::size_t j = 0; j <= n; ++j) w.at(i, j) -= f * w.at(row, j);
    }
    pivot_col_of_row[row] = static_cast<std::ptrdiff_t>(col);
    ++row;
  }
  for (std::size_t i = row; i < w.rows(); ++i)
    if (!w.at(i, n).is_zero()) return std::nullopt;
  Vector x(n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < row; ++i)
    x[static_cast<std::size_t>(pivot_col_of_row[i])] = w.at(i, n);
  return x;
}

}  // namespace linrel
