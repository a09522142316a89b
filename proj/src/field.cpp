#include "assocgeom/field.hpp"

#include <charconv>

namespace asg {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw Error(ErrorCode::kInvalidArgument, "field modulus must be a prime <= 2^31, got " + std::to_string(p));
  }
  return Field{static_cast<std::uint32_t>(p)};
}

std::string Field::name() const {
  return is_rational() ? std::string("q") : "p=" + std::to_string(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "p=") {
    std::uint64_t p = 0;
    const auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      if (p <= (std::uint64_t{1} << 31) && is_prime_number(p)) return Field{static_cast<std::uint32_t>(p)};
      throw Error(ErrorCode::kParse, "field modulus is not a prime <= 2^31: " + std::string(digits));
    }
  }
  throw Error(ErrorCode::kParse, "expected 'p=<prime>' or 'q', got '" + std::string(text) + "'");
}

Fp Fp::inv() const {
  if (v_ == 0) throw Error(ErrorCode::kDomain, "division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, Field{p_});
}

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::kDomain, "rational with zero denominator");
  // boost 1.74 rejects negative denominators here
  q_ = den < 0 ? Value(Int(-num), Int(-den)) : Value(num, den);
}

Rational Rational::inv() const {
  if (q_ == 0) throw Error(ErrorCode::kDomain, "division by zero in Q");
  return Rational(Value(1) / q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.q_ == 0) throw Error(ErrorCode::kDomain, "division by zero in Q");
  return Rational(Rational::Value(a.q_ / b.q_));
}

std::string Rational::str() const {
  const Int den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

namespace {

std::int64_t parse_int64(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "not a scalar: '" + std::string(whole) + "'");
  }
  return v;
}

Rational::Int parse_bigint(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw Error(ErrorCode::kParse, "not a scalar: '" + std::string(whole) + "'");
  Rational::Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::kParse, "not a scalar: '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Rational::Int(-v) : v;
}

}  // namespace

template <>
Fp parse_scalar<Fp>(std::string_view text, Field field) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fp(parse_int64(text, text), field);
  const Fp num(parse_int64(text.substr(0, slash), text), field);
  const Fp den(parse_int64(text.substr(slash + 1), text), field);
  if (den.is_zero()) throw Error(ErrorCode::kParse, "denominator vanishes mod p: '" + std::string(text) + "'");
  return num / den;
}

template <>
Rational parse_scalar<Rational>(std::string_view text, Field /*field*/) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text, text), Rational::Int(1));
  const auto den = parse_bigint(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::kParse, "zero denominator: '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash), text), den);
}

}  // namespace asg
