#pragma once

#include <array>
#include <cstdint>

#include "cslkit/lattice.hpp"
#include "cslkit/quat.hpp"

namespace cslkit {

/// The vectors r^(0)..r^(3) of a primitive integral quaternion.
struct CslVectors {
  std::array<IVec3, 4> v;
  const IVec3& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

/// Half-integral input is first rescaled to the primitive integral quaternion on its ray.
CslVectors csl_vectors(const Quat& r);

struct SigmaInfo {
  std::int64_t sigma;  // odd
  int ell;             // |r|^2 = 2^ell * sigma
};
SigmaInfo sigma(const Quat& r);

ExactLattice csl_basis_primitive(const Quat& r);
ExactLattice csl_basis_bcc(const Quat& r);
ExactLattice csl_basis_fcc(const Quat& r);
ExactLattice csl(LatticeKind kind, const Quat& r);

/// L ∩ R·L computed by the brute-force intersection, independent of the closed forms.
ExactLattice csl_oracle(LatticeKind kind, const Quat& r);

/// Whether m0 r^(0) + m1 r^(1) + m2 r^(2) + m3 r^(3) lies in the cP CSL, decided from
/// the coefficient constraints alone. Components of m must lie in ½Z.
bool membership_coeff_check(const Quat& r, const RQuat& m);
bool membership_coeff_check(const Quat& r, const Quat& m);

}  // namespace cslkit
