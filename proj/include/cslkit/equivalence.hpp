#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cslkit/quat.hpp"

namespace cslkit {

/// The proper rotation group 432 as 24 sign-canonical primitive integral quaternions.
class CubicGroup {
 public:
  static const std::vector<Quat>& elements();
  /// All 48 primitive quaternions (both signs).
  static const std::vector<Quat>& elements48();
  /// r (any scale) is a rotation of 432.
  static bool contains(const Quat& r);
};

struct IntersectionGroup {
  std::vector<Quat> elements;  // sorted
  int order = 0;
  std::string label;  // e.g. "trigonal 32"
};

/// H(R) = G ∩ R G R⁻¹: the Q in 432 with R⁻¹ Q R in 432.
IntersectionGroup intersection_group(const Quat& r);

/// r and s lie in the same double coset G r G; with grimmer also when s ~ r⁻¹.
bool equivalent(const Quat& r, const Quat& s, bool grimmer = false);

/// Primitive integral quaternions q·r·q' over q, q' in 432, sign-canonical, deduplicated and sorted.
std::vector<Quat> double_coset(const Quat& r);

/// Lexicographically smallest element of double_coset(r).
Quat canonical_rep(const Quat& r);

enum class FormTag { Unit, Sixfold, AxisMNNN, AxisMN00, AxisMNN0, VectorialGeneral, General };
const char* to_string(FormTag t);

struct FormClass {
  FormTag tag = FormTag::General;
  /// Display representative: (m,n,n,n), (m,n,0,0), (m,n,n,0), (0,l,m,n), (0,1,1,1), (1,0,0,0),
  /// or for general classes the minimal-norm form with sorted non-negative vector part.
  Quat form;
  std::int64_t l = 0, m = 0, n = 0;
  /// q·r·q' is the same rotation as form.
  Quat left, right;
  std::string str() const;
};

FormClass classify_form(const Quat& r);

struct CountReport {
  std::int64_t sigma = 0;
  /// Identity class; only nonzero for Σ = 1.
  std::int64_t n0 = 0;
  std::int64_t n1 = 0, n2 = 0, n3 = 0, n4 = 0, n5 = 0;
  std::int64_t f = 0;
  std::int64_t f_ineq = 0;
};

/// Class counts from the number-theoretic formulas; throws for even Σ.
CountReport counts(std::int64_t sigma);

/// Σ ∏ (1 + 1/p) over the distinct primes p | Σ, for odd Σ.
std::int64_t f_formula(std::int64_t sigma);

/// Distinct prime factors, ascending, with multiplicity.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Every rotation with coincidence index Σ, as sign-canonical primitive integral quaternions, sorted.
std::vector<Quat> enumerate_rotations(std::int64_t sigma);

struct ClassInfo {
  FormClass form;
  Quat canonical;  // canonical_rep
  int h_order = 0;
  std::int64_t size = 0;  // |G r G| = 576 / |H|
  /// With grimmer set: canonical rep of the inverse class when different.
  bool paired = false;
  Quat partner;
};

/// One entry per equivalence class, sorted by canonical representative.
std::vector<ClassInfo> enumerate_classes(std::int64_t sigma, bool grimmer = false);

}  // namespace cslkit
