#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cslkit/mat3.hpp"
#include "cslkit/rational.hpp"

namespace cslkit {

/// Integral (den 1) or half-integral (den 2, all numerators odd) quaternion num/den.
class Quat {
 public:
  using Num = std::array<std::int64_t, 4>;

  Quat() : num_{0, 0, 0, 0}, den_(1) {}
  Quat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : num_{a, b, c, d}, den_(1) {}
  explicit Quat(const Num& num) : num_(num), den_(1) {}

  /// Reduces even numerators over den 2; throws when num/den is not integral or Hurwitz.
  static Quat make(const Num& num, std::int64_t den);

  const Num& num() const { return num_; }
  std::int64_t num(int i) const { return num_[static_cast<std::size_t>(i)]; }
  std::int64_t den() const { return den_; }

  Rational component(int i) const { return Rational(num(i), den_); }
  bool is_zero() const { return num_ == Num{0, 0, 0, 0}; }
  bool is_integral() const { return den_ == 1; }
  bool is_vectorial() const { return num_[0] == 0; }
  IVec3 vector_num() const { return {num_[1], num_[2], num_[3]}; }

  /// den 1 and gcd of numerators 1.
  bool is_primitive() const;

  /// "(a,b,c,d)" or "1/2(a,b,c,d)".
  std::string str() const;

  /// Accepts "(a,b,c,d)", "a,b,c,d" and "1/2(a,b,c,d)"; whitespace-insensitive.
  static Quat parse(std::string_view text);

  friend bool operator==(const Quat&, const Quat&) = default;
  /// Lexicographic on (den, n0, n1, n2, n3).
  friend std::strong_ordering operator<=>(const Quat& a, const Quat& b);

 private:
  Num num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Quat& q);

Quat mul(const Quat& a, const Quat& b);
Quat conj(const Quat& a);
Quat negate(const Quat& a);
Rational norm_sq(const Quat& a);
Rational inner(const Quat& a, const Quat& b);

/// Removes common factors and makes the first nonzero component positive.
/// Half-integral input stays half-integral unless rescaling gives an integral quaternion.
Quat primitive_reduce(const Quat& a);

/// The primitive integral quaternion on the same ray, sign-canonical. This is the
/// canonical key of the rotation cayley(a).
Quat primitive_integral(const Quat& a);

/// First nonzero component made positive; no other scaling.
Quat sign_canonical(const Quat& a);

/// Same rotation (quaternions proportional).
bool same_rotation(const Quat& a, const Quat& b);

ExactMat3 cayley(const Quat& r);

/// Inverse of the Cayley map for a rational orthogonal matrix. A det -1 matrix is first
/// composed with the inversion and *improper is set. Throws for non-orthogonal input.
Quat quaternion_from_matrix(const ExactMat3& m, bool* improper = nullptr);

struct AxisAngle {
  IVec3 axis;
  Rational cos_phi;
};
AxisAngle axis_angle(const Quat& r);

/// Conventional symbol for the rotations of 432, else "φ = arccos(c), [uvw]".
std::string crystallographic_name(const Quat& r);

/// A quaternion with arbitrary rational components, used for quotients like conj(q)·r/|q|².
using RQuat = std::array<Rational, 4>;

RQuat to_rquat(const Quat& q);
RQuat mul(const RQuat& a, const RQuat& b);
RQuat conj(const RQuat& a);
Rational norm_sq(const RQuat& a);
/// Primitive integral quaternion on the same ray (sign-canonical).
Quat primitive_integral(const RQuat& a);
/// Every component in ½Z.
bool is_half_integral(const RQuat& a);
std::string to_string(const RQuat& a);

/// n divided by its largest power-of-two factor.
std::int64_t odd_part(std::int64_t n);

}  // namespace cslkit
