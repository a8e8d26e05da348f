#pragma once

// Brute-force reference computations used to check the library. They share
// only the Scalar/Matrix containers with it; the algorithms are separate.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "wlp/bipoly.hpp"
#include "wlp/linalg.hpp"
#include "wlp/module.hpp"
#include "wlp/pencil.hpp"

namespace oracle {

using wlp::BiPoly;
using wlp::FieldSpec;
using wlp::IdealGens;
using wlp::Matrix;
using wlp::Monomial;
using wlp::Scalar;
using wlp::UniPoly;

/// Leibniz expansion over all permutations.
inline Scalar leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(m.field());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = Scalar::one(m.field());
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Plain Gaussian elimination without reuse of the library's rref.
inline std::size_t elimination_rank(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
  Matrix out(m.field(), r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out(i, j) = m(r[i], c[j]);
  return out;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& r : subsets(m.rows(), k))
      for (const auto& c : subsets(m.cols(), k))
        if (!leibniz_det(submatrix(m, r, c)).is_zero()) return k;
  return 0;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline UniPoly interpolate(const FieldSpec& f, const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  UniPoly total(f);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis = UniPoly::constant(Scalar::one(f));
    Scalar denom = Scalar::one(f);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly::linear(Scalar::one(f), -xs[j]);
      denom = denom * (xs[i] - xs[j]);
    }
    total = total + basis * UniPoly::constant(ys[i] / denom);
  }
  return total;
}

/// det(g*a + b) by Leibniz at g = 0..n, then interpolation.
inline UniPoly interpolated_det(const Matrix& a, const Matrix& b) {
  const FieldSpec& f = a.field();
  std::vector<Scalar> xs, ys;
  for (std::size_t t = 0; t <= a.rows(); ++t) {
    Scalar g(f, static_cast<long long>(t));
    xs.push_back(g);
    ys.push_back(leibniz_det(Matrix::combine(g, a, Scalar::one(f), b)));
  }
  return interpolate(f, xs, ys);
}

/// Generic rank of g*a + b: largest k with a k x k minor that is a nonzero
/// polynomial in g (each minor found by interpolation).
inline std::size_t minor_pencil_rank(const Matrix& a, const Matrix& b) {
  for (std::size_t k = std::min(a.rows(), a.cols()); k > 0; --k)
    for (const auto& r : subsets(a.rows(), k))
      for (const auto& c : subsets(a.cols(), k))
        if (!interpolated_det(submatrix(a, r, c), submatrix(b, r, c)).is_zero()) return k;
  return 0;
}

// ---------------------------------------------------------------------------
// Ideals without Groebner bases

/// Coefficient vector of a degree-d form in the basis monomials_of_degree(d).
inline wlp::Vector coeffs(const BiPoly& f, int d, const FieldSpec& field) {
  auto mons = wlp::monomials_of_degree(d);
  wlp::Vector v;
  for (const auto& m : mons) v.push_back(f.coefficient(m));
  (void)field;
  return v;
}

/// Rows spanning I_d: every monomial multiple of a generator landing in degree d.
inline std::vector<wlp::Vector> ideal_part(const IdealGens& I, int d) {
  std::vector<wlp::Vector> rows;
  for (const auto& g : I.gens()) {
    int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& m : wlp::monomials_of_degree(e)) rows.push_back(coeffs(g.times_monomial(m), d, I.field()));
  }
  return rows;
}

inline std::size_t span_rank(const FieldSpec& f, std::size_t cols, const std::vector<wlp::Vector>& rows) {
  if (rows.empty()) return 0;
  return elimination_rank(Matrix::from_row_vectors(f, cols, rows));
}

inline std::size_t ideal_dim(const IdealGens& I, int d) {
  return span_rank(I.field(), static_cast<std::size_t>(d + 1), ideal_part(I, d));
}

/// f (homogeneous of degree d) lies in I.
inline bool in_ideal(const IdealGens& I, const BiPoly& f) {
  if (f.is_zero()) return true;
  int d = f.degree();
  auto rows = ideal_part(I, d);
  std::size_t base = span_rank(I.field(), static_cast<std::size_t>(d + 1), rows);
  rows.push_back(coeffs(f, d, I.field()));
  return span_rank(I.field(), static_cast<std::size_t>(d + 1), rows) == base;
}

/// dim (S/I)_d.
inline std::size_t quotient_dim(const IdealGens& I, int d) { return static_cast<std::size_t>(d + 1) - ideal_dim(I, d); }

/// dim of the degree-d part of (gens + I)/I.
inline std::size_t submodule_dim(const IdealGens& I, const std::vector<BiPoly>& gens, int d) {
  auto rows = ideal_part(I, d);
  std::size_t base = span_rank(I.field(), static_cast<std::size_t>(d + 1), rows);
  for (const auto& g : gens) {
    int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& m : wlp::monomials_of_degree(e)) rows.push_back(coeffs(g.times_monomial(m), d, I.field()));
  }
  return span_rank(I.field(), static_cast<std::size_t>(d + 1), rows) - base;
}

/// Rank of multiplication by alpha*x + beta*y from component i, recomputed
/// from the module's matrices by plain elimination.
inline std::size_t specialized_rank(const wlp::GradedModule& m, std::size_t i, const wlp::LinearForm& l) {
  return elimination_rank(Matrix::combine(l.alpha, m.mul_x(i), l.beta, m.mul_y(i)));
}

inline bool attains_max_rank_everywhere(const wlp::GradedModule& m, const wlp::LinearForm& l) {
  for (std::size_t i = 0; i + 1 < m.length(); ++i)
    if (specialized_rank(m, i, l) != std::min(m.dim(i), m.dim(i + 1))) return false;
  return true;
}

}  // namespace oracle
