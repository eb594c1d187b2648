#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cslkit/lattice.hpp"
#include "cslkit/quat.hpp"

namespace cslkit {

enum class CrystalSystem { Cubic, Hexagonal, Rhombohedral, Tetragonal, Orthorhombic, Monoclinic, Trivial };
const char* to_string(CrystalSystem s);

/// Proper rotation order of the holohedry of each system: 24, 12, 6, 8, 4, 2, 1.
int proper_order(CrystalSystem s);

/// A group of proper rotations. Generators act on L(R) for the quaternion the group was
/// computed for; standard_generators are the textbook generators for the class form.
struct SymmetryGroup {
  CrystalSystem system = CrystalSystem::Trivial;
  int order = 1;  // proper rotations
  std::vector<Quat> generators;
  std::vector<Quat> standard_generators;
  Quat form;                    // class form the standard generators refer to
  std::vector<Quat> elements;   // sorted primitive integral keys
};

/// All products of the generators, as primitive integral keys, sorted; includes the identity.
std::vector<Quat> group_closure(const std::vector<Quat>& generators);

/// Minimal symmetry group from the case list (hexagonal / trigonal / tetragonal /
/// orthorhombic / monoclinic / trivial).
SymmetryGroup minimal_symmetry_group(const Quat& r);

/// Minimal symmetry group straight from the definition: generated by G ∩ RGR⁻¹ and all
/// Q in RG with Q² in G.
std::vector<Quat> minimal_symmetry_elements(const Quat& r);

/// Q·L(R) = L(R), decided by L(R) ⊆ L(Q) and L(R) ⊆ L(QR).
bool is_symmetry_operation(const Quat& q, const Quat& r, LatticeKind kind = LatticeKind::cP);

/// The rotation about the axis of r through π is a symmetry of L(R) iff |q|² divides 2 r0,
/// with q the primitive axis of r.
bool axis_symmetry_test(const Quat& r);

/// 2^ell r = q m with q, m orthogonal integral vectors and Σ(q), Σ(m) coprime.
struct OrthDecomposition {
  Quat q;  // vectorial, primitive
  Quat m;  // vectorial, integral
  int ell = 0;
};

/// Canonical decomposition (smallest |q|², then smallest q), or none. Throws for r0 != 0.
std::optional<OrthDecomposition> decompose_orthogonal(const Quat& r);

/// Every decomposition found by the search, each with q sign-canonical.
std::vector<OrthDecomposition> all_orthogonal_decompositions(const Quat& r);

/// Number of distinct unordered axis pairs {q, m} among the decompositions.
std::int64_t count_orthogonal_decompositions(const Quat& r);

/// Exact symmetry group of L(R) for r equivalent to a twofold rotation (or to 432 itself).
/// Throws for other r.
SymmetryGroup symmetry_group(const Quat& r);

/// m = conj(q) r / |q|² is (half)integral and Σ(q), Σ(m) are coprime.
bool coprime_factor_check(const Quat& r, const Quat& q);

}  // namespace cslkit
