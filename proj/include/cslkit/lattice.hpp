#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cslkit/mat3.hpp"

namespace cslkit {

enum class LatticeKind { cP, cI, cF };

const char* to_string(LatticeKind k);
LatticeKind parse_lattice_kind(const std::string& s);
inline constexpr LatticeKind kAllKinds[] = {LatticeKind::cP, LatticeKind::cI, LatticeKind::cF};

/// Integer 3xk matrix stored as columns.
using IColumns = std::vector<IVec3>;

/// Column-style Hermite normal form of an integer 3xk matrix of rank 3.
/// Returns H (lower triangular, positive diagonal, 0 <= h_ij < h_ii for j < i).
/// When `transform` is non-null it receives the unimodular kxk matrix U (row-major)
/// with A*U = [H | 0].
IMat3 column_hnf(const IColumns& a, std::vector<std::vector<std::int64_t>>* transform = nullptr);

/// A full-rank lattice (1/den) * H * Z^3 in canonical form: H in column HNF and
/// gcd(den, entries of H) = 1. Equal lattices have identical representations.
class ExactLattice {
 public:
  /// Z^3.
  ExactLattice();

  static ExactLattice from_generators(const std::vector<RVec3>& gens);
  static ExactLattice from_integer_generators(const IColumns& gens, std::int64_t den = 1);

  std::int64_t den() const { return den_; }
  const IMat3& hnf() const { return hnf_; }

  /// Basis column j as a rational vector.
  RVec3 basis(int j) const;
  ExactMat3 basis_matrix() const;

  /// Covolume (absolute determinant of the basis).
  Rational volume() const;

  friend bool operator==(const ExactLattice&, const ExactLattice&) = default;

  std::string str() const;

 private:
  ExactLattice(std::int64_t den, const IMat3& hnf) : den_(den), hnf_(hnf) {}
  std::int64_t den_;
  IMat3 hnf_;
};

/// Columns of raw_basis are basis vectors; throws when singular.
ExactLattice hnf_canonicalize(const ExactMat3& raw_basis);

bool contains(const ExactLattice& lat, const RVec3& v);
bool contains(const ExactLattice& lat, const IVec3& v);
/// sub ⊆ sup.
bool is_sublattice(const ExactLattice& sub, const ExactLattice& sup);

/// [sup : sub]; throws naming a basis vector of sub outside sup when sub ⊄ sup.
std::int64_t index_in(const ExactLattice& sub, const ExactLattice& sup);

ExactLattice intersect(const ExactLattice& a, const ExactLattice& b);

/// Lattice generated by a and b together.
ExactLattice lattice_sum(const ExactLattice& a, const ExactLattice& b);

/// Q * lat.
ExactLattice transform(const ExactMat3& q, const ExactLattice& lat);

/// Greedy-reduced basis, sorted by norm.
std::vector<RVec3> reduced_basis(const ExactLattice& lat);

/// All nonzero lattice vectors with squared length <= max_norm, sorted by (norm, coordinates).
std::vector<RVec3> short_vectors(const ExactLattice& lat, const Rational& max_norm);

/// Every orthogonal Q (det ±1) with Q * lat = lat, sorted.
std::vector<ExactMat3> point_group(const ExactLattice& lat);

/// Elements of a group of 3x3 matrices with determinant +1.
std::vector<ExactMat3> proper_part(const std::vector<ExactMat3>& group);

/// v·v mod 4.
int residue_class(const IVec3& v);

/// cP = Z^3, cI = Z^3 + ½(1,1,1), cF = Z^3 + ½(1,1,0) + ½(0,1,1).
ExactLattice cubic_lattice(LatticeKind kind);

/// {"den": d, "hnf": [[...],[...],[...]]}, rows of H.
std::string to_json(const ExactLattice& lat);
/// Rejects non-canonical input.
ExactLattice lattice_from_json(const std::string& text);

}  // namespace cslkit
