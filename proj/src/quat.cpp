#include "cslkit/quat.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <vector>

namespace cslkit {

namespace ck = checked;

namespace {

std::int64_t gcd4(const Quat::Num& n) {
  return ck::gcd(ck::gcd(n[0], n[1]), ck::gcd(n[2], n[3]));
}

Quat::Num flip_to_positive(Quat::Num n) {
  for (auto x : n) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : n) y = ck::neg(y);
    break;
  }
  return n;
}

}  // namespace

Quat Quat::make(const Num& num, std::int64_t den) {
  Quat q(num);
  if (den == 1) return q;
  if (den != 2) throw Error("quaternion denominator must be 1 or 2");
  int odd = 0;
  for (auto x : num) odd += (x & 1) != 0;
  if (odd == 0) return Quat(Num{num[0] / 2, num[1] / 2, num[2] / 2, num[3] / 2});
  if (odd != 4)
    throw Error("1/2(" + std::to_string(num[0]) + "," + std::to_string(num[1]) + "," +
                std::to_string(num[2]) + "," + std::to_string(num[3]) +
                ") is neither integral nor half-integral");
  q.den_ = 2;
  return q;
}

bool Quat::is_primitive() const { return den_ == 1 && gcd4(num_) == 1; }

std::string Quat::str() const {
  std::string s = den_ == 2 ? "1/2(" : "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += std::to_string(num_[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

Quat Quat::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s += c;
  std::string_view v = s;
  auto fail = [&]() -> Error { return Error("cannot parse quaternion '" + std::string(text) + "'"); };
  std::int64_t den = 1;
  if (v.starts_with("1/2")) {
    den = 2;
    v.remove_prefix(3);
    if (!v.starts_with('(')) throw fail();
  } else if (v.starts_with("½")) {
    den = 2;
    v.remove_prefix(std::string_view("½").size());
    if (!v.starts_with('(')) throw fail();
  }
  if (v.starts_with('(')) {
    if (!v.ends_with(')')) throw fail();
    v = v.substr(1, v.size() - 2);
  }
  Num n{};
  for (int i = 0; i < 4; ++i) {
    auto comma = v.find(',');
    if ((i < 3) == (comma == std::string_view::npos)) throw fail();
    std::string_view part = v.substr(0, comma);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), n[static_cast<std::size_t>(i)]);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) throw fail();
    v = comma == std::string_view::npos ? std::string_view() : v.substr(comma + 1);
  }
  return make(n, den);
}

std::strong_ordering operator<=>(const Quat& a, const Quat& b) {
  if (auto c = a.den_ <=> b.den_; c != 0) return c;
  return a.num_ <=> b.num_;
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << q.str(); }

Quat mul(const Quat& a, const Quat& b) {
  const auto& x = a.num();
  const auto& y = b.num();
  auto m = [](std::int64_t p, std::int64_t q) { return ck::mul(p, q); };
  Quat::Num n{
      ck::sub(ck::sub(m(x[0], y[0]), m(x[1], y[1])), ck::add(m(x[2], y[2]), m(x[3], y[3]))),
      ck::add(ck::add(m(x[0], y[1]), m(x[1], y[0])), ck::sub(m(x[2], y[3]), m(x[3], y[2]))),
      ck::add(ck::add(m(x[0], y[2]), m(x[2], y[0])), ck::sub(m(x[3], y[1]), m(x[1], y[3]))),
      ck::add(ck::add(m(x[0], y[3]), m(x[3], y[0])), ck::sub(m(x[1], y[2]), m(x[2], y[1])))};
  std::int64_t den = a.den() * b.den();
  while (den > 1 && ((n[0] | n[1] | n[2] | n[3]) & 1) == 0) {
    for (auto& c : n) c /= 2;
    den /= 2;
  }
  return Quat::make(n, den);
}

Quat conj(const Quat& a) {
  const auto& n = a.num();
  return Quat::make({n[0], ck::neg(n[1]), ck::neg(n[2]), ck::neg(n[3])}, a.den());
}

Quat negate(const Quat& a) {
  const auto& n = a.num();
  return Quat::make({ck::neg(n[0]), ck::neg(n[1]), ck::neg(n[2]), ck::neg(n[3])}, a.den());
}

Rational norm_sq(const Quat& a) {
  const auto& n = a.num();
  std::int64_t s = ck::add(ck::mul_add(n[0], n[0], n[1], n[1]), ck::mul_add(n[2], n[2], n[3], n[3]));
  return Rational(s, a.den() * a.den());
}

Rational inner(const Quat& a, const Quat& b) {
  const auto& x = a.num();
  const auto& y = b.num();
  std::int64_t s = ck::add(ck::mul_add(x[0], y[0], x[1], y[1]), ck::mul_add(x[2], y[2], x[3], y[3]));
  return Rational(s, a.den() * b.den());
}

Quat primitive_reduce(const Quat& a) {
  if (a.is_zero()) throw Error("zero quaternion has no primitive form");
  Quat::Num n = a.num();
  std::int64_t g = gcd4(n);
  for (auto& x : n) x /= g;
  return Quat::make(flip_to_positive(n), a.den());
}

Quat primitive_integral(const Quat& a) {
  if (a.is_zero()) throw Error("zero quaternion has no primitive form");
  Quat::Num n = a.num();
  std::int64_t g = gcd4(n);
  for (auto& x : n) x /= g;
  return Quat(flip_to_positive(n));
}

Quat sign_canonical(const Quat& a) { return Quat::make(flip_to_positive(a.num()), a.den()); }

bool same_rotation(const Quat& a, const Quat& b) { return primitive_integral(a) == primitive_integral(b); }

ExactMat3 cayley(const Quat& r) {
  if (r.is_zero()) throw Error("zero quaternion has no rotation");
  Quat p = primitive_integral(r);
  auto m = [](std::int64_t x, std::int64_t y) { return ck::mul(x, y); };
  const std::int64_t k = p.num(0), l = p.num(1), u = p.num(2), v = p.num(3);
  const std::int64_t kk = m(k, k), ll = m(l, l), uu = m(u, u), vv = m(v, v);
  const std::int64_t n = ck::add(ck::add(kk, ll), ck::add(uu, vv));
  IMat3 e{{{ck::sub(ck::add(kk, ll), ck::add(uu, vv)), 2 * ck::sub(m(l, u), m(k, v)), 2 * ck::add(m(k, u), m(l, v))},
           {2 * ck::add(m(k, v), m(l, u)), ck::sub(ck::add(kk, uu), ck::add(ll, vv)), 2 * ck::sub(m(u, v), m(k, l))},
           {2 * ck::sub(m(l, v), m(k, u)), 2 * ck::add(m(k, l), m(u, v)), ck::sub(ck::add(kk, vv), ck::add(ll, uu))}}};
  ExactMat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = Rational(e[i][j], n);
  if (!is_orthogonal(out) || det(out) != Rational(1)) throw Error("internal: Cayley matrix is not a rotation");
  return out;
}

Quat quaternion_from_matrix(const ExactMat3& m_in, bool* improper) {
  if (!is_orthogonal(m_in)) throw Error("matrix is not orthogonal");
  ExactMat3 m = m_in;
  bool flip = det(m) != Rational(1);
  if (flip) m = negate(m);
  if (improper) *improper = flip;
  const Rational one(1), two(2);
  const Rational tr = m[0][0] + m[1][1] + m[2][2];
  const RQuat rows[4] = {
      {one + tr, m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]},
      {m[2][1] - m[1][2], one + two * m[0][0] - tr, m[0][1] + m[1][0], m[0][2] + m[2][0]},
      {m[0][2] - m[2][0], m[0][1] + m[1][0], one + two * m[1][1] - tr, m[1][2] + m[2][1]},
      {m[1][0] - m[0][1], m[0][2] + m[2][0], m[1][2] + m[2][1], one + two * m[2][2] - tr}};
  for (const auto& row : rows) {
    if (norm_sq(row).is_zero()) continue;
    Quat q = primitive_integral(row);
    if (cayley(q) != m) throw Error("internal: matrix to quaternion conversion failed");
    return q;
  }
  throw Error("internal: matrix to quaternion conversion failed");
}

AxisAngle axis_angle(const Quat& r) {
  Quat p = primitive_integral(r);
  IVec3 v = p.vector_num();
  if (v == IVec3{0, 0, 0}) throw Error("axis undefined for the identity rotation");
  std::int64_t g = content(v);
  IVec3 axis{v[0] / g, v[1] / g, v[2] / g};
  if (p.num(0) < 0) axis = {-axis[0], -axis[1], -axis[2]};
  std::int64_t w2 = ck::mul(p.num(0), p.num(0));
  std::int64_t v2 = norm_sq(v);
  return {axis, Rational(ck::sub(w2, v2), ck::add(w2, v2))};
}

namespace {

std::string axis_text(const IVec3& a) {
  bool short_form = std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x > -10 && x < 10; });
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    if (i && !short_form) s += ',';
    s += std::to_string(a[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

}  // namespace

std::string crystallographic_name(const Quat& r) {
  Quat p = primitive_integral(r);
  if (p == Quat(1, 0, 0, 0)) return "1";
  std::int64_t n = norm_sq(p).to_integer();
  AxisAngle aa = axis_angle(p);
  if (n > 4) return "φ = arccos(" + aa.cos_phi.str() + "), " + axis_text(aa.axis);

  int order = 2;
  if (aa.cos_phi == Rational(0)) order = 4;
  else if (aa.cos_phi == Rational(-1, 2)) order = 3;
  IVec3 v = p.vector_num();
  IVec3 d = primitive_direction(v);
  std::int64_t first = 0;
  for (auto x : v)
    if (x != 0) {
      first = x;
      break;
    }
  std::string s = std::to_string(order);
  if (order != 2) s += (p.num(0) > 0) == (first > 0) ? "⁺" : "⁻";
  s += ' ';
  char letter = 'x';
  for (int i = 0; i < 3; ++i)
    if (d[static_cast<std::size_t>(i)] != 0) {
      letter = "xyz"[i];
      break;
    }
  for (int i = 0; i < 3; ++i) {
    if (i) s += ',';
    std::int64_t c = d[static_cast<std::size_t>(i)];
    if (c == 0) s += '0';
    else {
      s += letter;
      if (c < 0) s += "̄";
    }
  }
  return s;
}

RQuat to_rquat(const Quat& q) {
  return {q.component(0), q.component(1), q.component(2), q.component(3)};
}

RQuat mul(const RQuat& x, const RQuat& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] + x[2] * y[0] + x[3] * y[1] - x[1] * y[3],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

RQuat conj(const RQuat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Rational norm_sq(const RQuat& a) { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]; }

Quat primitive_integral(const RQuat& a) {
  std::int64_t d = 1;
  for (const auto& x : a) d = ck::lcm(d, x.den());
  Quat::Num n{};
  for (int i = 0; i < 4; ++i) n[static_cast<std::size_t>(i)] = ck::mul(a[static_cast<std::size_t>(i)].num(), d / a[static_cast<std::size_t>(i)].den());
  return primitive_integral(Quat(n));
}

bool is_half_integral(const RQuat& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.den() <= 2; });
}

std::string to_string(const RQuat& a) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += a[static_cast<std::size_t>(i)].str();
  }
  return s + ")";
}

std::int64_t odd_part(std::int64_t n) {
  if (n == 0) return 0;
  while ((n & 1) == 0) n /= 2;
  return n;
}

}  // namespace cslkit
