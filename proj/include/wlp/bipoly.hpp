#pragma once

// Polynomials in K[x, y]: terms, arithmetic, graded pieces, text I/O, and the
// ideal expressions accepted on input.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wlp/field.hpp"

namespace wlp {

/// x^a y^b. Ordered degree-lexicographically with x > y.
struct Monomial {
  int a = 0;
  int b = 0;

  int degree() const noexcept { return a + b; }
  bool divides(const Monomial& o) const noexcept { return a <= o.a && b <= o.b; }

  friend Monomial operator*(const Monomial& l, const Monomial& r) { return {l.a + r.a, l.b + r.b}; }
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const { return {a - divisor.a, b - divisor.b}; }

  friend Monomial lcm(const Monomial& l, const Monomial& r) {
    return {l.a > r.a ? l.a : r.a, l.b > r.b ? l.b : r.b};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) {
    if (auto c = l.degree() <=> r.degree(); c != 0) return c;
    return l.a <=> r.a;
  }

  std::string to_string() const {
    auto factor = [](char v, int e) {
      std::string s(1, v);
      if (e > 1) s += "^" + std::to_string(e);
      return s;
    };
    if (a == 0 && b == 0) return "1";
    if (a == 0) return factor('y', b);
    if (b == 0) return factor('x', a);
    return factor('x', a) + "*" + factor('y', b);
  }
};

/// All degree-d monomials, largest first: x^d, x^(d-1)y, ..., y^d.
inline std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int a = d; a >= 0; --a) out.push_back({a, d - a});
  return out;
}

class BiPoly {
 public:
  /// Terms sorted largest monomial first.
  using Terms = std::map<Monomial, Scalar, std::greater<>>;

  BiPoly() = default;
  explicit BiPoly(const FieldSpec& field) : field_(field) {}

  static BiPoly zero(const FieldSpec& f) { return BiPoly(f); }
  static BiPoly constant(const Scalar& c) { return term(c, {0, 0}); }
  static BiPoly monomial(const FieldSpec& f, Monomial m) { return term(Scalar::one(f), m); }
  static BiPoly x(const FieldSpec& f) { return monomial(f, {1, 0}); }
  static BiPoly y(const FieldSpec& f) { return monomial(f, {0, 1}); }
  static BiPoly term(const Scalar& c, Monomial m) {
    BiPoly p(c.field());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const FieldSpec& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : leading_monomial().degree(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  bool is_homogeneous() const {
    if (is_zero()) return true;
    int d = degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Scalar& c) {
    if (c.field() != field_) throw FieldMismatch();
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  BiPoly& operator+=(const BiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  BiPoly operator-() const { return scaled(-Scalar::one(field_)); }

  friend BiPoly operator*(const BiPoly& f, const BiPoly& g) {
    f.check(g);
    BiPoly out(f.field_);
    for (const auto& [m1, c1] : f.terms_)
      for (const auto& [m2, c2] : g.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
  }

  BiPoly scaled(const Scalar& c) const {
    if (c.field() != field_) throw FieldMismatch();
    BiPoly out(field_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
  }

  BiPoly times_monomial(const Monomial& mono) const {
    BiPoly out(field_);
    for (const auto& [m, v] : terms_) out.terms_.emplace(m * mono, v);
    return out;
  }

  /// Sum of the terms of total degree exactly d.
  BiPoly homogeneous_component(int d) const {
    BiPoly out(field_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

  /// Canonical text: deglex order, e.g. "x^9 - x^2*y^7", "-1/2*x*y + 3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool negative = field_.is_rationals() && sgn(c.rational()) < 0;
      Scalar mag = negative ? -c : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      bool unit_coeff = mag.is_one();
      if (m.degree() == 0)
        out += mag.to_string();
      else if (unit_coeff)
        out += m.to_string();
      else
        out += mag.to_string() + "*" + m.to_string();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

 private:
  void check(const BiPoly& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }

  FieldSpec field_;
  Terms terms_;
};

/// Homogeneous, nonzero generators of an ideal of K[x, y].
class IdealGens {
 public:
  explicit IdealGens(FieldSpec field, std::vector<BiPoly> gens = {}) : field_(field) {
    for (auto& g : gens) add(std::move(g));
  }

  void add(BiPoly g) {
    if (g.field() != field_) throw FieldMismatch();
    if (g.is_zero()) throw PreconditionError("ideal generators must be nonzero");
    if (!g.is_homogeneous()) throw PreconditionError("ideal generator is not homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<BiPoly>& gens() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }
  std::size_t size() const noexcept { return gens_.size(); }

 private:
  FieldSpec field_;
  std::vector<BiPoly> gens_;
};

/// The e+1 monomial generators x^e, x^(e-1)y, ..., y^e of (x, y)^e.
inline IdealGens expand_power_ideal(int e, const FieldSpec& field = {}) {
  if (e < 1) throw PreconditionError("power of the maximal ideal needs exponent >= 1");
  IdealGens out(field);
  for (const auto& m : monomials_of_degree(e)) out.add(BiPoly::monomial(field, m));
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class PolyLexer {
 public:
  PolyLexer(std::string_view text, std::size_t pos, const FieldSpec& field) : text_(text), pos_(pos), field_(field) {}

  std::size_t pos() const noexcept { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    if (out.empty()) fail("expected integer");
    return out;
  }

  int small_int() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 6) throw ParseError("exponent too large", at);
    return std::stoi(d);
  }

  /// poly := ['-'] term (('+'|'-') term)*
  BiPoly poly() {
    BiPoly out(field_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      auto [m, c] = term();
      out.add_term(m, negate ? -c : c);
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        break;
    }
    return out;
  }

 private:
  /// term := coeff | [coeff '*'] factor ('*' factor)*
  std::pair<Monomial, Scalar> term() {
    Monomial m;
    Scalar c = Scalar::one(field_);
    char next = peek();
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(next))) {
      std::string num = digits();
      std::string den;
      if (peek() == '/') {
        ++pos_;
        den = digits();
      }
      mpz_class n(num), d(den.empty() ? std::string("1") : den);
      if (d == 0) fail("zero denominator");
      c = Scalar(field_, mpq_class(n, d));
      if (!accept('*')) return {m, c};
    }
    while (need_factor) {
      m = m * factor();
      need_factor = accept('*');
    }
    return {m, c};
  }

  /// factor := ('x'|'y') ['^' int]
  Monomial factor() {
    char v = peek();
    if (std::isalpha(static_cast<unsigned char>(v))) {
      if (v != 'x' && v != 'y') fail(std::string("unknown variable '") + v + "'");
      ++pos_;
      if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        fail("unknown variable name");
      int e = 1;
      if (accept('^')) e = small_int();
      return v == 'x' ? Monomial{e, 0} : Monomial{0, e};
    }
    fail("expected 'x' or 'y'");
  }

  std::string_view text_;
  std::size_t pos_;
  FieldSpec field_;
};

}  // namespace detail

/// Parses a polynomial, e.g. "x^9 - x^2*y^7" or "-1/2*x*y + 3".
inline BiPoly parse_poly(std::string_view text, const FieldSpec& field = {}) {
  detail::PolyLexer lex(text, 0, field);
  BiPoly p = lex.poly();
  if (lex.peek() != '\0') lex.fail("unexpected trailing input");
  return p;
}

/// One summand of an ideal expression: "(g1, ..., gk)" or "(x,y)^e".
struct IdealTerm {
  std::vector<BiPoly> gens;
  int power = 1;

  friend bool operator==(const IdealTerm&, const IdealTerm&) = default;
};

/// Sum of ideal terms as written on input, e.g. "(x,y)^8 + (x^2*y^5, x^4*y^3)".
struct IdealExpr {
  FieldSpec field;
  std::vector<IdealTerm> terms;

  IdealGens expand() const {
    IdealGens out(field);
    for (const auto& t : terms) {
      if (t.power > 1) {
        IdealGens power = expand_power_ideal(t.power, field);
        for (const auto& g : power.gens()) out.add(g);
      } else {
        for (const auto& g : t.gens) out.add(g);
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i > 0) out += " + ";
      out += "(";
      for (std::size_t j = 0; j < terms[i].gens.size(); ++j) {
        if (j > 0) out += ", ";
        out += terms[i].gens[j].to_string();
      }
      out += ")";
      if (terms[i].power > 1) out += "^" + std::to_string(terms[i].power);
    }
    return out;
  }

  friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

namespace detail {

inline std::vector<BiPoly> parse_poly_list(PolyLexer& lex) {
  std::vector<BiPoly> out;
  do {
    std::size_t at = lex.pos();
    BiPoly p = lex.poly();
    if (p.is_zero()) throw ParseError("zero polynomial in generator list", at);
    out.push_back(std::move(p));
  } while (lex.accept(','));
  return out;
}

/// ideal := '(' poly-list ')' ['^' int] ('+' '(' poly-list ')' ['^' int])*
inline IdealExpr parse_ideal(PolyLexer& lex, const FieldSpec& field) {
  IdealExpr expr{field, {}};
  do {
    lex.expect('(');
    std::size_t at = lex.pos();
    IdealTerm t{parse_poly_list(lex), 1};
    lex.expect(')');
    if (lex.accept('^')) {
      t.power = lex.small_int();
      if (t.power < 1) throw ParseError("ideal power must be >= 1", at);
      bool maximal = t.gens.size() == 2 &&
                     ((t.gens[0] == BiPoly::x(field) && t.gens[1] == BiPoly::y(field)) ||
                      (t.gens[0] == BiPoly::y(field) && t.gens[1] == BiPoly::x(field)));
      if (!maximal) throw ParseError("only (x,y) may be raised to a power", at);
      t.gens = {BiPoly::x(field), BiPoly::y(field)};
    }
    expr.terms.push_back(std::move(t));
  } while (lex.accept('+'));
  return expr;
}

}  // namespace detail

inline IdealExpr parse_ideal(std::string_view text, const FieldSpec& field = {}) {
  detail::PolyLexer lex(text, 0, field);
  IdealExpr e = detail::parse_ideal(lex, field);
  if (lex.peek() != '\0') lex.fail("unexpected trailing input");
  return e;
}

}  // namespace wlp
