#pragma once

// Exact dense linear algebra over a FieldSpec. Dimensions in this domain are
// tiny, so everything is plain Gauss-Jordan on value types.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wlp/field.hpp"

namespace wlp {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t k) {
  Vector v = zero_vector(f, n);
  v.at(k) = Scalar::one(f);
  return v;
}

inline bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

  /// Row-major from small integers, e.g. Matrix::from_rows(Q, {{1, 1, 0}, {0, 0, 0}}).
  static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
    }
    return m;
  }

  /// Columns given as vectors of length `rows` (needed when there are no columns).
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw PreconditionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_row_vectors(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw PreconditionError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw PreconditionError("matrix-vector shape mismatch");
    Vector out = zero_vector(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  Matrix scaled(const Scalar& s) const {
    Matrix c = *this;
    for (auto& e : c.data_) e *= s;
    return c;
  }

  /// s*a + t*b
  static Matrix combine(const Scalar& s, const Matrix& a, const Scalar& t, const Matrix& b) {
    return a.scaled(s) + b.scaled(t);
  }

  /// [a | b]
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw PreconditionError("hstack row mismatch");
    Matrix c(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
    }
    return c;
  }

  /// [a ; b]
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw PreconditionError("vstack column mismatch");
    Matrix c(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) c(a.rows_ + i, j) = b(i, j);
    return c;
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix c(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) c(i, j) = (*this)(i, idx[j]);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i > 0) out += "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0) out += " ";
        out += (*this)(i, j).to_string();
      }
    }
    return out + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

 private:
  void check_same_shape(const Matrix& b) const {
    if (field_ != b.field_) throw FieldMismatch();
    if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("matrix shape mismatch");
  }

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline Scalar determinant(Matrix m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar::zero(m.field());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
  auto r = rref(Matrix::hstack(m, Matrix::identity(m.field(), m.rows())));
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (r.rref(i, i) != Scalar::one(m.field())) throw DivisionByZero();
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
  return inv;
}

inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// Subspaces

/// A subspace of K^n stored by its canonical RREF basis (rows).
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FieldSpec& f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient)); }
  static Subspace full(const FieldSpec& f, std::size_t ambient) { return Subspace(Matrix::identity(f, ambient)); }

  /// Span of the given vectors (each of length `ambient`).
  static Subspace span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& vectors) {
    return Subspace(Matrix::from_row_vectors(f, ambient, vectors));
  }

  /// Row space of m.
  static Subspace row_space(const Matrix& m) { return Subspace(m); }
  /// Column space of m.
  static Subspace column_space(const Matrix& m) { return Subspace(m.transpose()); }

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw PreconditionError("vector length differs from ambient dimension");
    return rank(Matrix::vstack(basis_, Matrix::from_row_vectors(field(), ambient_dim(), {v}))) == dim();
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(const Matrix& rows) {
    auto r = rref(rows);
    Matrix b(rows.field(), r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = r.rref(i, j);
    basis_ = std::move(b);
  }

  Matrix basis_;
};

/// {v : m v = 0}
inline Subspace kernel_basis(const Matrix& m) {
  auto r = rref(m);
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rref(i, free);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vecs);
}

inline void check_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw PreconditionError("subspaces live in different ambient spaces");
  if (u.field() != v.field()) throw FieldMismatch();
}

inline Subspace subspace_join(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  return Subspace::row_space(Matrix::vstack(u.basis(), v.basis()));
}

/// u ∩ v: solve a U = b V through the kernel of [U^T | -V^T].
inline Subspace subspace_meet(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  const FieldSpec& f = u.field();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(f, u.ambient_dim());
  Matrix stacked = Matrix::hstack(u.basis().transpose(), v.basis().transpose().scaled(-Scalar::one(f)));
  Subspace k = kernel_basis(stacked);
  std::vector<Vector> out;
  for (const auto& coeffs : k.vectors()) {
    Vector w = zero_vector(f, u.ambient_dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += coeffs[i] * u.basis()(i, j);
    out.push_back(std::move(w));
  }
  return Subspace::span(f, u.ambient_dim(), out);
}

/// m(u) for a linear map m whose source is u's ambient space.
inline Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw PreconditionError("map source differs from subspace ambient space");
  std::vector<Vector> out;
  for (const auto& v : u.vectors()) out.push_back(m * v);
  return Subspace::span(m.field(), m.rows(), out);
}

/// Incrementally grown list of independent vectors that can express any
/// vector in their span as coordinates w.r.t. the list (in insertion order).
class IncrementalBasis {
 public:
  IncrementalBasis(const FieldSpec& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }

  /// Adds v if independent of the current vectors. Returns whether it was added.
  bool add(const Vector& v) {
    auto [residual, combo] = reduce(v);
    if (is_zero_vector(residual)) return false;
    std::size_t pivot = 0;
    while (residual[pivot].is_zero()) ++pivot;
    // residual = v - sum combo_k * vectors_k
    Vector expr = zero_vector(field_, vectors_.size() + 1);
    for (std::size_t k = 0; k < combo.size(); ++k) expr[k] = -combo[k];
    expr.back() = Scalar::one(field_);
    for (auto& e : echelon_) e.expr.push_back(Scalar::zero(field_));
    echelon_.push_back({pivot, std::move(residual), std::move(expr)});
    vectors_.push_back(v);
    return true;
  }

  bool contains(const Vector& v) const { return is_zero_vector(reduce(v).first); }

  /// Coordinates of v in terms of vectors(); nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    auto [residual, combo] = reduce(v);
    if (!is_zero_vector(residual)) return std::nullopt;
    return combo;
  }

  /// The vectors as matrix columns (ambient x size).
  Matrix as_columns() const { return Matrix::from_columns(field_, ambient_, vectors_); }

 private:
  struct Row {
    std::size_t pivot;
    Vector row;   // reduced vector with a nonzero entry at `pivot`
    Vector expr;  // row = sum expr_k * vectors_k
  };

  std::pair<Vector, Vector> reduce(Vector v) const {
    if (v.size() != ambient_) throw PreconditionError("vector length differs from ambient dimension");
    Vector combo = zero_vector(field_, vectors_.size());
    for (const auto& e : echelon_) {
      if (v[e.pivot].is_zero()) continue;
      Scalar f = v[e.pivot] / e.row[e.pivot];
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * e.row[j];
      for (std::size_t k = 0; k < e.expr.size(); ++k) combo[k] += f * e.expr[k];
    }
    return {std::move(v), std::move(combo)};
  }

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> vectors_;
  std::vector<Row> echelon_;
};

}  // namespace wlp
