#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "cslkit/rational.hpp"

namespace cslkit {

using IVec3 = std::array<std::int64_t, 3>;
using RVec3 = std::array<Rational, 3>;

/// 3x3 matrix, row-major: m[row][col].
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

using IMat3 = Mat3<std::int64_t>;
using ExactMat3 = Mat3<Rational>;

std::int64_t dot(const IVec3& a, const IVec3& b);
Rational dot(const RVec3& a, const RVec3& b);
IVec3 cross(const IVec3& a, const IVec3& b);
RVec3 cross(const RVec3& a, const RVec3& b);
std::int64_t norm_sq(const IVec3& v);
Rational norm_sq(const RVec3& v);

RVec3 to_rational(const IVec3& v);
RVec3 scale(const RVec3& v, const Rational& s);
RVec3 add(const RVec3& a, const RVec3& b);
RVec3 sub(const RVec3& a, const RVec3& b);
IVec3 add(const IVec3& a, const IVec3& b);
IVec3 sub(const IVec3& a, const IVec3& b);
IVec3 scale(const IVec3& v, std::int64_t s);

/// gcd of the components (>= 0).
std::int64_t content(const IVec3& v);

/// Divides by the content and flips the sign so the first nonzero entry is positive.
IVec3 primitive_direction(const IVec3& v);

/// Smallest positive integer multiple of a rational vector's direction; sign preserved.
IVec3 integer_direction(const RVec3& v);

bool is_integral(const RVec3& v);
IVec3 to_integer(const RVec3& v);

ExactMat3 identity3();
ExactMat3 to_rational(const IMat3& m);
ExactMat3 mul(const ExactMat3& a, const ExactMat3& b);
RVec3 mul(const ExactMat3& a, const RVec3& v);
ExactMat3 transpose(const ExactMat3& a);
Rational det(const ExactMat3& a);
std::int64_t det(const IMat3& a);
ExactMat3 inverse(const ExactMat3& a);
ExactMat3 negate(const ExactMat3& a);

/// Column j of a matrix.
RVec3 column(const ExactMat3& m, int j);
ExactMat3 from_columns(const RVec3& c0, const RVec3& c1, const RVec3& c2);

/// M^T M == I exactly.
bool is_orthogonal(const ExactMat3& m);

/// Lexicographic order on the entries, for deterministic sorting.
std::strong_ordering compare(const ExactMat3& a, const ExactMat3& b);
struct Mat3Less {
  bool operator()(const ExactMat3& a, const ExactMat3& b) const { return compare(a, b) < 0; }
};

std::string to_string(const ExactMat3& m);
std::string to_string(const IVec3& v);
std::string to_string(const RVec3& v);

}  // namespace cslkit
