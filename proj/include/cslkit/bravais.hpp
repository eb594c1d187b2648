#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cslkit/lattice.hpp"
#include "cslkit/quat.hpp"
#include "cslkit/rational.hpp"

namespace cslkit {

/// Bravais class with squared conventional lattice parameters. Parameters the
/// classification does not fix (a, b and β of monoclinic cells) are left empty.
struct BravaisReport {
  std::string symbol;  // hP hR tP tI oP oC oF oI mP mC (cP cI cF for Σ = 1, aP from the oracle)
  std::optional<Rational> a2, b2, c2;
  std::string setting_note;
  std::string source = "closed-form";  // or "oracle"
};

/// Closed-form Bravais class of the CSL of `kind` for r equivalent to a twofold rotation.
/// Throws for other r.
BravaisReport bravais(LatticeKind kind, const Quat& r);

/// Bravais class read off an arbitrary lattice: point group, rotation axes and the
/// index of the axis sublattice.
BravaisReport oracle_bravais(const ExactLattice& lat);

/// Centering index of a symbol relative to the primitive cell: P 1, C/I 2, F 4, R 3.
int centering_index(const std::string& symbol);

/// A conventional cell with the reported symbol and parameters exists in the oracle CSL.
bool conventional_cell_check(LatticeKind kind, const Quat& r, const BravaisReport& report);
bool conventional_cell_check(LatticeKind kind, const Quat& r);

/// Shortest lattice vector parallel to the nonzero direction d.
RVec3 axis_vector(const ExactLattice& lat, const IVec3& d);

struct TableRow {
  std::int64_t sigma = 0;
  /// Class forms shown in the row; two for a class paired with its inverse class.
  std::vector<Quat> representatives;
  std::vector<Quat> canonical;  // canonical_rep of each listed class
  std::vector<LatticeKind> kinds;
  std::vector<BravaisReport> reports;  // parallel to kinds
};

/// One row per class, sorted by (Σ, canonical representative); a class and its inverse
/// class share one row when they are not equivalent.
std::vector<TableRow> table(std::int64_t max_sigma, const std::vector<LatticeKind>& kinds);

std::string table_csv(const std::vector<TableRow>& rows);
std::string table_markdown(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

}  // namespace cslkit
