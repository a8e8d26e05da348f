#pragma once

// Exact scalars over Q (GMP rationals) or a prime field GF(p).

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "wlp/error.hpp"

namespace wlp {

class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  /// The rationals. Default.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }

  static FieldSpec prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionError("GF(p) needs a prime modulus, got " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 31)) throw PreconditionError("prime modulus must be below 2^31");
    FieldSpec f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
  bool is_finite() const noexcept { return kind_ == Kind::prime; }
  /// Modulus for GF(p); 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// True if the field has more than n elements.
  bool has_more_than(std::uint64_t n) const noexcept { return is_rationals() || p_ > n; }

  std::string to_string() const { return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

/// An element of a FieldSpec in canonical form: a reduced fraction with
/// positive denominator over Q, a residue in [0, p) over GF(p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Scalar(const FieldSpec& field, long long value) : field_(field) {
    if (field_.is_rationals())
      q_ = mpq_class(mpz_class(std::to_string(value)));
    else
      r_ = reduce_signed(value);
  }

  Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
    if (field_.is_rationals()) {
      mpz_class num = value.get_num(), den = value.get_den();
      if (den < 0) {
        num = -num;
        den = -den;
      }
      if (den == 0) throw DivisionByZero();
      q_ = mpq_class(num, den);
      q_.canonicalize();
      return;
    }
    mpz_class num = value.get_num(), den = value.get_den();
    mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw DivisionByZero();
    r_ = mul_mod(n.get_ui(), inverse_mod(d.get_ui()));
  }

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0LL); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1LL); }

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const noexcept { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

  /// Only meaningful over Q.
  const mpq_class& rational() const noexcept { return q_; }
  /// Only meaningful over GF(p).
  std::uint64_t residue() const noexcept { return r_; }

  Scalar operator-() const {
    Scalar out = *this;
    if (field_.is_rationals())
      out.q_ = -q_;
    else
      out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rationals())
      q_ += o.q_;
    else
      r_ = (r_ + o.r_) % field_.characteristic();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    check(o);
    if (field_.is_rationals())
      q_ -= o.q_;
    else
      r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rationals())
      q_ *= o.q_;
    else
      r_ = mul_mod(r_, o.r_);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw DivisionByZero();
    if (field_.is_rationals())
      q_ /= o.q_;
    else
      r_ = mul_mod(r_, inverse_mod(o.r_));
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const { return one(field_) / *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  std::string to_string() const { return field_.is_rationals() ? q_.get_str() : std::to_string(r_); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }

  std::uint64_t reduce_signed(long long v) const {
    auto p = static_cast<long long>(field_.characteristic());
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) const { return (a * b) % field_.characteristic(); }

  std::uint64_t inverse_mod(std::uint64_t a) const {
    // Fermat: a^(p-2)
    std::uint64_t p = field_.characteristic(), result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul_mod(result, base);
      base = mul_mod(base, base);
      e >>= 1;
    }
    return result;
  }

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

/// Parses an integer or a fraction "a/b" (optional leading sign, no decimals).
inline Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> Scalar { throw ParseError(what, i); };
  std::string num, den;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) num += text[i++];
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
  if (num.empty() || num == "-" || num == "+") return fail("expected integer");
  if (num[0] == '+') num.erase(0, 1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
    if (den.empty()) return fail("expected denominator");
  }
  if (i != text.size()) return fail("unexpected character in scalar");
  mpz_class n(num), d(den.empty() ? std::string("1") : den);
  if (d == 0) throw DivisionByZero();
  return Scalar(field, mpq_class(n, d));
}

}  // namespace wlp
