#pragma once

// Univariate polynomials K[g] and the matrix pencil g*A + B: its determinant
// as a polynomial and its rank over the rational function field K(g).

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wlp/linalg.hpp"

namespace wlp {

/// Coefficients in ascending degree, no trailing zeros; zero is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const FieldSpec& field, std::vector<Scalar> coeffs = {}) : field_(field), c_(std::move(coeffs)) {
    for (const auto& s : c_)
      if (s.field() != field_) throw FieldMismatch();
    trim();
  }

  static UniPoly constant(const Scalar& s) { return UniPoly(s.field(), {s}); }
  /// a*g + b
  static UniPoly linear(const Scalar& a, const Scalar& b) { return UniPoly(a.field(), {b, a}); }

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Scalar& leading() const { return c_.back(); }

  Scalar evaluate(const Scalar& t) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UniPoly(a.field_, std::move(out));
  }
  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& s : out.c_) s = -s;
    return out;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(a.field_, std::move(out));
  }

  /// Quotient and remainder of long division by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    check(d);
    if (d.is_zero()) throw DivisionByZero();
    std::vector<Scalar> rem = c_;
    std::vector<Scalar> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, Scalar::zero(field_));
    Scalar inv = d.leading().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
      Scalar f = rem[k + d.c_.size() - 1] * inv;
      quo[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
  }

  /// Division that must be exact (Bareiss steps).
  UniPoly exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
    return q;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  /// Descending-degree text, e.g. "g^3 - 2*g + 1".
  std::string to_string(const std::string& var = "g") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Scalar& c = c_[k];
      if (c.is_zero()) continue;
      bool negative = field_.is_rationals() && sgn(c.rational()) < 0;
      Scalar mag = negative ? -c : c;
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      first = false;
      std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      if (k == 0)
        out += mag.to_string();
      else if (mag.is_one())
        out += power;
      else
        out += mag.to_string() + "*" + power;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

 private:
  void check(const UniPoly& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FieldSpec field_;
  std::vector<Scalar> c_;
};

namespace detail {

using PolyMatrix = std::vector<std::vector<UniPoly>>;

/// Entries g*a(i,j) + b(i,j).
inline PolyMatrix pencil_entries(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("pencil matrices differ in shape");
  PolyMatrix m(a.rows(), std::vector<UniPoly>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = UniPoly::linear(a(i, j), b(i, j));
  return m;
}

/// Fraction-free (Bareiss) elimination over K[g] with full pivoting.
/// Returns the rank over K(g) and, for square input, the determinant.
inline std::pair<std::size_t, UniPoly> bareiss(PolyMatrix m, const FieldSpec& f) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  UniPoly prev = UniPoly::constant(Scalar::one(f));
  bool negate = false;
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t j = k; j < cols && pr == rows; ++j)
      for (std::size_t i = k; i < rows; ++i)
        if (!m[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    if (pr != k) {
      std::swap(m[pr], m[k]);
      negate = !negate;
    }
    if (pc != k) {
      for (auto& row : m) std::swap(row[pc], row[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = UniPoly(f);
    }
    prev = m[k][k];
  }
  UniPoly det(f);
  if (rows == cols) {
    if (k == rows)
      det = rows == 0 ? UniPoly::constant(Scalar::one(f)) : m[rows - 1][rows - 1];
    if (negate) det = -det;
  }
  return {k, det};
}

}  // namespace detail

/// det(g*a + b) as a polynomial in g, by fraction-free elimination over K[g].
inline UniPoly polydet(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw PreconditionError("polydet needs square matrices");
  return detail::bareiss(detail::pencil_entries(a, b), a.field()).second;
}

/// Rank of g*a + b over K(g), computed symbolically.
inline std::size_t pencil_rank_symbolic(const Matrix& a, const Matrix& b) {
  return detail::bareiss(detail::pencil_entries(a, b), a.field()).first;
}

/// Rank of g*a + b over K(g).
///
/// A rank-r pencil has a nonzero r x r minor, a polynomial of degree <= r in g,
/// so it survives at one of any min(rows, cols) + 1 distinct points. When the
/// field has max(rows, cols) + 1 elements we take the maximum rank over
/// g = 0, 1, ..., max(rows, cols); otherwise we eliminate over K[g].
inline std::size_t pencil_generic_rank(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("pencil matrices differ in shape");
  const FieldSpec& f = a.field();
  const std::size_t n = std::max(a.rows(), a.cols());
  const std::size_t full = std::min(a.rows(), a.cols());
  if (!f.has_more_than(n)) return pencil_rank_symbolic(a, b);
  std::size_t best = 0;
  for (std::size_t t = 0; t <= n && best < full; ++t)
    best = std::max(best, rank(Matrix::combine(Scalar(f, static_cast<long long>(t)), a, Scalar::one(f), b)));
  return best;
}

}  // namespace wlp
