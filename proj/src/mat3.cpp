#include "cslkit/mat3.hpp"

namespace cslkit {

namespace ck = checked;

std::int64_t dot(const IVec3& a, const IVec3& b) {
  return ck::add(ck::mul_add(a[0], b[0], a[1], b[1]), ck::mul(a[2], b[2]));
}

Rational dot(const RVec3& a, const RVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

IVec3 cross(const IVec3& a, const IVec3& b) {
  return {ck::sub(ck::mul(a[1], b[2]), ck::mul(a[2], b[1])),
          ck::sub(ck::mul(a[2], b[0]), ck::mul(a[0], b[2])),
          ck::sub(ck::mul(a[0], b[1]), ck::mul(a[1], b[0]))};
}

RVec3 cross(const RVec3& a, const RVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t norm_sq(const IVec3& v) { return dot(v, v); }
Rational norm_sq(const RVec3& v) { return dot(v, v); }

RVec3 to_rational(const IVec3& v) { return {Rational(v[0]), Rational(v[1]), Rational(v[2])}; }

RVec3 scale(const RVec3& v, const Rational& s) { return {v[0] * s, v[1] * s, v[2] * s}; }
RVec3 add(const RVec3& a, const RVec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
RVec3 sub(const RVec3& a, const RVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

IVec3 add(const IVec3& a, const IVec3& b) {
  return {ck::add(a[0], b[0]), ck::add(a[1], b[1]), ck::add(a[2], b[2])};
}
IVec3 sub(const IVec3& a, const IVec3& b) {
  return {ck::sub(a[0], b[0]), ck::sub(a[1], b[1]), ck::sub(a[2], b[2])};
}
IVec3 scale(const IVec3& v, std::int64_t s) {
  return {ck::mul(v[0], s), ck::mul(v[1], s), ck::mul(v[2], s)};
}

std::int64_t content(const IVec3& v) { return ck::gcd(ck::gcd(v[0], v[1]), v[2]); }

IVec3 primitive_direction(const IVec3& v) {
  std::int64_t g = content(v);
  if (g == 0) throw Error("zero vector has no direction");
  IVec3 r{v[0] / g, v[1] / g, v[2] / g};
  for (auto x : r) {
    if (x != 0) {
      if (x < 0) r = {-r[0], -r[1], -r[2]};
      break;
    }
  }
  return r;
}

IVec3 integer_direction(const RVec3& v) {
  std::int64_t d = 1;
  for (const auto& x : v) d = ck::lcm(d, x.den());
  IVec3 w{};
  for (int i = 0; i < 3; ++i) w[i] = ck::mul(v[i].num(), d / v[i].den());
  std::int64_t g = content(w);
  if (g == 0) throw Error("zero vector has no direction");
  return {w[0] / g, w[1] / g, w[2] / g};
}

bool is_integral(const RVec3& v) {
  return v[0].is_integer() && v[1].is_integer() && v[2].is_integer();
}

IVec3 to_integer(const RVec3& v) {
  return {v[0].to_integer(), v[1].to_integer(), v[2].to_integer()};
}

ExactMat3 identity3() {
  ExactMat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

ExactMat3 to_rational(const IMat3& m) {
  ExactMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[i][j];
  return r;
}

ExactMat3 mul(const ExactMat3& a, const ExactMat3& b) {
  ExactMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

RVec3 mul(const ExactMat3& a, const RVec3& v) {
  RVec3 r{};
  for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return r;
}

ExactMat3 transpose(const ExactMat3& a) {
  ExactMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

Rational det(const ExactMat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::int64_t det(const IMat3& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return ck::sub(ck::mul(a[r0][c0], a[r1][c1]), ck::mul(a[r0][c1], a[r1][c0]));
  };
  std::int64_t t0 = ck::mul(a[0][0], minor(1, 2, 1, 2));
  std::int64_t t1 = ck::mul(a[0][1], minor(1, 2, 0, 2));
  std::int64_t t2 = ck::mul(a[0][2], minor(1, 2, 0, 1));
  return ck::add(ck::sub(t0, t1), t2);
}

ExactMat3 inverse(const ExactMat3& a) {
  Rational d = det(a);
  if (d.is_zero()) throw Error("singular matrix");
  ExactMat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
    }
  }
  return r;
}

ExactMat3 negate(const ExactMat3& a) {
  ExactMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = -a[i][j];
  return r;
}

RVec3 column(const ExactMat3& m, int j) { return {m[0][j], m[1][j], m[2][j]}; }

ExactMat3 from_columns(const RVec3& c0, const RVec3& c1, const RVec3& c2) {
  ExactMat3 m{};
  for (int i = 0; i < 3; ++i) {
    m[i][0] = c0[i];
    m[i][1] = c1[i];
    m[i][2] = c2[i];
  }
  return m;
}

bool is_orthogonal(const ExactMat3& m) { return mul(transpose(m), m) == identity3(); }

std::strong_ordering compare(const ExactMat3& a, const ExactMat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (auto c = a[i][j] <=> b[i][j]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string to_string(const ExactMat3& m) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < 3; ++j) {
      if (j) s += ' ';
      s += m[i][j].str();
    }
  }
  return s;
}

std::string to_string(const IVec3& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

std::string to_string(const RVec3& v) {
  return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + ")";
}

}  // namespace cslkit
