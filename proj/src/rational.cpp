#include "cslkit/rational.hpp"

#include <charconv>
#include <ostream>

namespace cslkit {

namespace ck = checked;

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = ck::neg(num);
    den = ck::neg(den);
  }
  std::int64_t g = ck::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) throw Error("rational " + str() + " is not an integer");
  return num_;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = ck::neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  std::int64_t g = ck::gcd(den_, o.den_);
  std::int64_t n = ck::add(ck::mul(num_, o.den_ / g), ck::mul(o.num_, den_ / g));
  std::int64_t d = ck::mul(den_ / g, o.den_);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  std::int64_t g1 = ck::gcd(num_, o.den_);
  std::int64_t g2 = ck::gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  std::int64_t n = ck::mul(num_ / g1, o.num_ / g2);
  std::int64_t d = ck::mul(den_ / g2, o.den_ / g1);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error("division by zero rational");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = (__int128)a.num_ * b.den_;
  __int128 rhs = (__int128)b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error("cannot parse rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  return Rational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace cslkit
