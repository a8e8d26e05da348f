#pragma once

// Buchberger's algorithm for homogeneous ideals of K[x, y] under deglex
// (x > y), normal forms, and standard-monomial bases of S/I.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "wlp/bipoly.hpp"

namespace wlp {

class GroebnerBasis {
 public:
  /// Reduced, monic, sorted by leading monomial (largest first).
  const std::vector<BiPoly>& basis() const noexcept { return basis_; }
  const FieldSpec& field() const noexcept { return field_; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_) out.push_back(g.leading_monomial());
    return out;
  }

  bool in_leading_ideal(const Monomial& m) const {
    return std::any_of(basis_.begin(), basis_.end(), [&](const BiPoly& g) { return g.leading_monomial().divides(m); });
  }

  /// Smallest a with x^a a leading monomial, if any.
  std::optional<int> pure_x_power() const { return pure_power(true); }
  std::optional<int> pure_y_power() const { return pure_power(false); }

 private:
  friend GroebnerBasis buchberger(const IdealGens& gens);

  std::optional<int> pure_power(bool want_x) const {
    std::optional<int> best;
    for (const auto& g : basis_) {
      const Monomial& m = g.leading_monomial();
      int e = want_x ? (m.b == 0 ? m.a : -1) : (m.a == 0 ? m.b : -1);
      if (e >= 0 && (!best || e < *best)) best = e;
    }
    return best;
  }

  FieldSpec field_;
  std::vector<BiPoly> basis_;
};

namespace detail {

/// Fully reduces f by `divisors` (need not be a Groebner basis).
inline BiPoly reduce(BiPoly f, const std::vector<BiPoly>& divisors) {
  BiPoly remainder(f.field());
  while (!f.is_zero()) {
    Monomial lm = f.leading_monomial();
    Scalar lc = f.leading_coefficient();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lm)) {
        f -= g.times_monomial(lm / g.leading_monomial()).scaled(lc / g.leading_coefficient());
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      f.add_term(lm, -lc);
    }
  }
  return remainder;
}

inline BiPoly s_polynomial(const BiPoly& f, const BiPoly& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  BiPoly a = f.times_monomial(l / f.leading_monomial()).scaled(f.leading_coefficient().inverse());
  BiPoly b = g.times_monomial(l / g.leading_monomial()).scaled(g.leading_coefficient().inverse());
  return a - b;
}

inline BiPoly monic(const BiPoly& f) { return f.scaled(f.leading_coefficient().inverse()); }

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`.
///
/// Pairs are processed by increasing lcm degree. Once x^a and y^b are both
/// leading monomials, every monomial of degree >= a+b-1 lies in the leading
/// ideal, so pairs at or above that degree are dropped.
inline GroebnerBasis buchberger(const IdealGens& gens) {
  const FieldSpec& field = gens.field();
  std::vector<BiPoly> g;
  for (const auto& p : gens.gens()) {
    BiPoly r = detail::reduce(p, g);
    if (!r.is_zero()) g.push_back(detail::monic(r));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return lcm(g[pr.first].leading_monomial(), g[pr.second].leading_monomial()).degree();
  };
  auto cutoff = [&]() -> std::optional<int> {
    std::optional<int> xa, yb;
    for (const auto& p : g) {
      const Monomial& m = p.leading_monomial();
      if (m.b == 0 && (!xa || m.a < *xa)) xa = m.a;
      if (m.a == 0 && (!yb || m.b < *yb)) yb = m.b;
    }
    if (xa && yb) return *xa + *yb - 1;
    return std::nullopt;
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [&](const auto& l, const auto& r) { return lcm_degree(l) < lcm_degree(r); });
    auto [i, j] = *it;
    pairs.erase(it);
    const Monomial& mi = g[i].leading_monomial();
    const Monomial& mj = g[j].leading_monomial();
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if ((mi.a == 0 || mj.a == 0) && (mi.b == 0 || mj.b == 0)) continue;
    if (auto c = cutoff(); c && lcm(mi, mj).degree() >= *c) continue;
    BiPoly r = detail::reduce(detail::s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(detail::monic(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<BiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = g[i].leading_monomial();
      const Monomial& mj = g[j].leading_monomial();
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<BiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    BiPoly lead = BiPoly::term(minimal[i].leading_coefficient(), minimal[i].leading_monomial());
    BiPoly tail = minimal[i] - lead;
    reduced.push_back(detail::monic(lead + detail::reduce(tail, others)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const BiPoly& l, const BiPoly& r) { return l.leading_monomial() > r.leading_monomial(); });

  GroebnerBasis out;
  out.field_ = field;
  out.basis_ = std::move(reduced);
  return out;
}

/// Remainder of f modulo the basis; zero iff f lies in the ideal.
inline BiPoly normal_form(const BiPoly& f, const GroebnerBasis& gb) {
  if (f.field() != gb.field()) throw FieldMismatch();
  return detail::reduce(f, gb.basis());
}

/// Degree-d monomials outside the leading ideal, largest first.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int d) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(d))
    if (!gb.in_leading_ideal(m)) out.push_back(m);
  return out;
}

struct ArtinianInfo {
  bool artinian = false;
  /// Least D with (S/I)_d = 0 for all d >= D. Meaningless unless artinian.
  int top_degree = 0;
};

inline ArtinianInfo is_artinian(const GroebnerBasis& gb) {
  auto xa = gb.pure_x_power();
  auto yb = gb.pure_y_power();
  if (!xa || !yb) return {false, 0};
  int top = 0;
  for (int d = 0; d <= *xa + *yb - 2; ++d)
    if (!standard_monomials(gb, d).empty()) top = d + 1;
  return {true, top};
}

/// Coordinates of the class of a degree-d polynomial in the basis
/// standard_monomials(gb, d).
inline std::vector<Scalar> quotient_coordinates(const BiPoly& f, const GroebnerBasis& gb, int d) {
  BiPoly r = normal_form(f, gb);
  std::vector<Scalar> out;
  for (const auto& m : standard_monomials(gb, d)) out.push_back(r.coefficient(m));
  return out;
}

}  // namespace wlp
