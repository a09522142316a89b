#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "assocgeom/error.hpp"

namespace asg {

/// Descriptor of the base field: GF(p) for p > 0, the rationals for p == 0.
struct Field {
  std::uint32_t p = 0;

  static Field prime(std::uint64_t p);
  static Field rationals() { return Field{0}; }

  bool is_prime() const noexcept { return p != 0; }
  bool is_rational() const noexcept { return p == 0; }

  /// "p=5" or "q"; the spelling used by every text format.
  std::string name() const;

  /// Inverse of name(); throws kParse.
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime_number(std::uint64_t n);

/// Residue class modulo a prime. Carries its modulus so a bare value is
/// self-describing; arithmetic between different moduli is a logic error.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, Field field) : p_(field.p) {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint32_t>(r);
  }

  static Fp zero(Field f) { return Fp(0, f); }
  static Fp one(Field f) { return Fp(1, f); }

  std::uint32_t residue() const noexcept { return v_; }
  Field field() const noexcept { return Field{p_}; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  Fp inv() const;

  Fp operator-() const noexcept { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  friend Fp operator+(Fp a, Fp b) noexcept {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) noexcept {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_), a.p_);
  }
  friend Fp operator*(Fp a, Fp b) noexcept {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp b) noexcept { return *this = *this + b; }
  Fp& operator-=(Fp b) noexcept { return *this = *this - b; }
  Fp& operator*=(Fp b) noexcept { return *this = *this * b; }

  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Fp a, Fp b) noexcept { return a.v_ <=> b.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) noexcept {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value, Field /*unused*/) : q_(value) {}
  Rational(const Int& num, const Int& den);
  explicit Rational(Value q) : q_(std::move(q)) {}

  static Rational zero(Field f) { return Rational(0, f); }
  static Rational one(Field f) { return Rational(1, f); }

  Int numerator() const { return boost::multiprecision::numerator(q_); }
  Int denominator() const { return boost::multiprecision::denominator(q_); }
  Field field() const noexcept { return Field::rationals(); }
  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Rational inv() const;

  Rational operator-() const { return Rational(Value(-q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Value(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Value(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Value(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (b.q_ < a.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "a" for integers, "a/b" otherwise.
  std::string str() const;

 private:
  Value q_;
};

template <class K>
concept FieldElement = requires(const K& a, const K& b, std::int64_t v, Field f) {
  { K(v, f) };
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inv() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.field() } -> std::same_as<Field>;
  { a.str() } -> std::same_as<std::string>;
};

/// Parses "k", "-k" or "a/b" into an element of `field`; throws kParse.
template <FieldElement K>
K parse_scalar(std::string_view text, Field field);

}  // namespace asg
