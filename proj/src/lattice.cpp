#include "cslkit/lattice.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace cslkit {

namespace ck = checked;

const char* to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::cP: return "cP";
    case LatticeKind::cI: return "cI";
    case LatticeKind::cF: return "cF";
  }
  return "?";
}

LatticeKind parse_lattice_kind(const std::string& s) {
  if (s == "cP" || s == "P" || s == "sc") return LatticeKind::cP;
  if (s == "cI" || s == "I" || s == "bcc") return LatticeKind::cI;
  if (s == "cF" || s == "F" || s == "fcc") return LatticeKind::cF;
  throw Error("unknown lattice kind '" + s + "' (expected cP, cI or cF)");
}

IMat3 column_hnf(const IColumns& a, std::vector<std::vector<std::int64_t>>* transform) {
  const std::size_t k = a.size();
  if (k < 3) throw Error("singular basis: fewer than three generators");
  IColumns c = a;
  std::vector<std::vector<std::int64_t>> u;
  if (transform) {
    u.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;
  }
  // (c_i, c_j) <- (x c_i + y c_j, p c_i + q c_j)
  auto combine = [&](std::size_t i, std::size_t j, std::int64_t x, std::int64_t y, std::int64_t p, std::int64_t q) {
    for (int r = 0; r < 3; ++r) {
      std::int64_t ci = c[i][r], cj = c[j][r];
      c[i][r] = ck::mul_add(x, ci, y, cj);
      c[j][r] = ck::mul_add(p, ci, q, cj);
    }
    if (transform)
      for (std::size_t r = 0; r < k; ++r) {
        std::int64_t ui = u[r][i], uj = u[r][j];
        u[r][i] = ck::mul_add(x, ui, y, uj);
        u[r][j] = ck::mul_add(p, ui, q, uj);
      }
  };
  auto axpy = [&](std::size_t dst, std::size_t src, std::int64_t f) {  // c_dst -= f c_src
    if (f == 0) return;
    for (int r = 0; r < 3; ++r) c[dst][r] = ck::sub(c[dst][r], ck::mul(f, c[src][r]));
    if (transform)
      for (std::size_t r = 0; r < k; ++r) u[r][dst] = ck::sub(u[r][dst], ck::mul(f, u[r][src]));
  };

  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t j = r + 1; j < k; ++j) {
      if (c[j][r] == 0) continue;
      auto e = ck::ext_gcd(c[r][r], c[j][r]);
      std::int64_t p = c[r][r] / e.g, q = c[j][r] / e.g;
      combine(r, j, e.x, e.y, ck::neg(q), p);
    }
    if (c[r][r] == 0) throw Error("singular basis: generators have rank < 3");
    if (c[r][r] < 0) combine(r, r == 0 ? 1 : 0, -1, 0, 0, 1);
  }
  for (std::size_t r = 1; r < 3; ++r)
    for (std::size_t j = 0; j < r; ++j) axpy(j, r, ck::floor_div(c[j][r], c[r][r]));

  if (transform) *transform = std::move(u);
  IMat3 h{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = c[j][i];
  return h;
}

ExactLattice::ExactLattice() : den_(1), hnf_{} {
  for (int i = 0; i < 3; ++i) hnf_[i][i] = 1;
}

ExactLattice ExactLattice::from_integer_generators(const IColumns& gens, std::int64_t den) {
  if (den <= 0) throw Error("lattice denominator must be positive");
  IMat3 h = column_hnf(gens);
  std::int64_t g = den;
  for (const auto& row : h)
    for (auto x : row) g = ck::gcd(g, x);
  for (auto& row : h)
    for (auto& x : row) x /= g;
  return ExactLattice(den / g, h);
}

ExactLattice ExactLattice::from_generators(const std::vector<RVec3>& gens) {
  std::int64_t d = 1;
  for (const auto& v : gens)
    for (const auto& x : v) d = ck::lcm(d, x.den());
  IColumns cols;
  cols.reserve(gens.size());
  for (const auto& v : gens) {
    IVec3 w{};
    for (int i = 0; i < 3; ++i) w[i] = ck::mul(v[i].num(), d / v[i].den());
    cols.push_back(w);
  }
  return from_integer_generators(cols, d);
}

RVec3 ExactLattice::basis(int j) const {
  return {Rational(hnf_[0][j], den_), Rational(hnf_[1][j], den_), Rational(hnf_[2][j], den_)};
}

ExactMat3 ExactLattice::basis_matrix() const { return from_columns(basis(0), basis(1), basis(2)); }

Rational ExactLattice::volume() const {
  Rational d(1, den_);
  return Rational(hnf_[0][0]) * Rational(hnf_[1][1]) * Rational(hnf_[2][2]) * d * d * d;
}

std::string ExactLattice::str() const { return to_json(*this); }

ExactLattice hnf_canonicalize(const ExactMat3& raw_basis) {
  return ExactLattice::from_generators({column(raw_basis, 0), column(raw_basis, 1), column(raw_basis, 2)});
}

bool contains(const ExactLattice& lat, const RVec3& v) {
  const IMat3& h = lat.hnf();
  Rational x[3];
  for (int i = 0; i < 3; ++i) {
    Rational w = v[i] * Rational(lat.den());
    for (int j = 0; j < i; ++j) w -= Rational(h[i][j]) * x[j];
    x[i] = w / Rational(h[i][i]);
    if (!x[i].is_integer()) return false;
  }
  return true;
}

bool contains(const ExactLattice& lat, const IVec3& v) { return contains(lat, to_rational(v)); }

bool is_sublattice(const ExactLattice& sub, const ExactLattice& sup) {
  for (int j = 0; j < 3; ++j)
    if (!contains(sup, sub.basis(j))) return false;
  return true;
}

std::int64_t index_in(const ExactLattice& sub, const ExactLattice& sup) {
  for (int j = 0; j < 3; ++j)
    if (!contains(sup, sub.basis(j)))
      throw Error("not a sublattice: basis vector " + to_string(sub.basis(j)) + " is not in the larger lattice");
  return (sub.volume() / sup.volume()).to_integer();
}

namespace {

IColumns scaled_columns(const ExactLattice& lat, std::int64_t to_den) {
  std::int64_t f = to_den / lat.den();
  IColumns out;
  for (int j = 0; j < 3; ++j)
    out.push_back({ck::mul(lat.hnf()[0][j], f), ck::mul(lat.hnf()[1][j], f), ck::mul(lat.hnf()[2][j], f)});
  return out;
}

}  // namespace

ExactLattice intersect(const ExactLattice& a, const ExactLattice& b) {
  std::int64_t d = ck::lcm(a.den(), b.den());
  IColumns ac = scaled_columns(a, d);
  IColumns bc = scaled_columns(b, d);
  IColumns m = ac;
  for (const auto& v : bc) m.push_back({ck::neg(v[0]), ck::neg(v[1]), ck::neg(v[2])});
  std::vector<std::vector<std::int64_t>> u;
  column_hnf(m, &u);
  IColumns gens;
  for (std::size_t j = 3; j < 6; ++j) {
    IVec3 v{0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) v = add(v, scale(ac[i], u[i][j]));
    gens.push_back(v);
  }
  return ExactLattice::from_integer_generators(gens, d);
}

ExactLattice lattice_sum(const ExactLattice& a, const ExactLattice& b) {
  std::int64_t d = ck::lcm(a.den(), b.den());
  IColumns gens = scaled_columns(a, d);
  for (const auto& v : scaled_columns(b, d)) gens.push_back(v);
  return ExactLattice::from_integer_generators(gens, d);
}

ExactLattice transform(const ExactMat3& q, const ExactLattice& lat) {
  return ExactLattice::from_generators({mul(q, lat.basis(0)), mul(q, lat.basis(1)), mul(q, lat.basis(2))});
}

namespace {

std::int64_t round_div(std::int64_t a, std::int64_t b) {  // b > 0
  return ck::floor_div(ck::add(ck::mul(2, a), b), ck::mul(2, b));
}

// Greedy reduction of an integer basis.
std::array<IVec3, 3> reduce_integer_basis(std::array<IVec3, 3> b) {
  auto by_norm = [](const IVec3& x, const IVec3& y) { return norm_sq(x) < norm_sq(y); };
  for (;;) {
    std::sort(b.begin(), b.end(), by_norm);
    for (;;) {  // Lagrange on (b0, b1)
      std::int64_t mu = round_div(dot(b[0], b[1]), norm_sq(b[0]));
      b[1] = sub(b[1], scale(b[0], mu));
      if (norm_sq(b[1]) >= norm_sq(b[0])) break;
      std::swap(b[0], b[1]);
    }
    // b2 minus a closest vector of the plane lattice spanned by b0, b1.
    std::int64_t g00 = norm_sq(b[0]), g01 = dot(b[0], b[1]), g11 = norm_sq(b[1]);
    std::int64_t t0 = dot(b[2], b[0]), t1 = dot(b[2], b[1]);
    std::int64_t det = ck::sub(ck::mul(g00, g11), ck::mul(g01, g01));
    std::int64_t x0 = ck::floor_div(ck::sub(ck::mul(t0, g11), ck::mul(t1, g01)), det);
    std::int64_t x1 = ck::floor_div(ck::sub(ck::mul(t1, g00), ck::mul(t0, g01)), det);
    IVec3 best = b[2];
    std::int64_t best_n = norm_sq(b[2]);
    for (std::int64_t i = x0 - 1; i <= x0 + 2; ++i)
      for (std::int64_t j = x1 - 1; j <= x1 + 2; ++j) {
        IVec3 c = sub(sub(b[2], scale(b[0], i)), scale(b[1], j));
        std::int64_t n = norm_sq(c);
        if (n < best_n) {
          best = c;
          best_n = n;
        }
      }
    b[2] = best;
    if (best_n >= norm_sq(b[1])) return b;
  }
}

std::array<IVec3, 3> integer_basis(const ExactLattice& lat) {
  std::array<IVec3, 3> b{};
  for (int j = 0; j < 3; ++j) b[j] = {lat.hnf()[0][j], lat.hnf()[1][j], lat.hnf()[2][j]};
  return b;
}

// Nonzero integer combinations of b with squared norm <= max_n.
std::vector<IVec3> enumerate_short(const std::array<IVec3, 3>& b, std::int64_t max_n) {
  std::int64_t g[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = dot(b[i], b[j]);
  IMat3 gm{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gm[i][j] = g[i][j];
  std::int64_t detg = det(gm);
  std::int64_t bound[3];
  for (int i = 0; i < 3; ++i) {
    int p = (i + 1) % 3, q = (i + 2) % 3;
    std::int64_t adj = ck::sub(ck::mul(g[p][p], g[q][q]), ck::mul(g[p][q], g[q][p]));
    bound[i] = ck::isqrt(ck::mul(max_n, adj) / detg);
  }
  std::vector<IVec3> out;
  for (std::int64_t i = -bound[0]; i <= bound[0]; ++i)
    for (std::int64_t j = -bound[1]; j <= bound[1]; ++j)
      for (std::int64_t k = -bound[2]; k <= bound[2]; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        IVec3 v = add(add(scale(b[0], i), scale(b[1], j)), scale(b[2], k));
        if (norm_sq(v) <= max_n) out.push_back(v);
      }
  std::sort(out.begin(), out.end(), [](const IVec3& x, const IVec3& y) {
    std::int64_t nx = norm_sq(x), ny = norm_sq(y);
    return nx != ny ? nx < ny : x < y;
  });
  return out;
}

RVec3 over(const IVec3& v, std::int64_t den) {
  return {Rational(v[0], den), Rational(v[1], den), Rational(v[2], den)};
}

}  // namespace

std::vector<RVec3> reduced_basis(const ExactLattice& lat) {
  auto b = reduce_integer_basis(integer_basis(lat));
  return {over(b[0], lat.den()), over(b[1], lat.den()), over(b[2], lat.den())};
}

std::vector<RVec3> short_vectors(const ExactLattice& lat, const Rational& max_norm) {
  if (max_norm.sign() <= 0) return {};
  Rational scaled = max_norm * Rational(lat.den()) * Rational(lat.den());
  std::int64_t max_n = ck::floor_div(scaled.num(), scaled.den());
  auto b = reduce_integer_basis(integer_basis(lat));
  std::vector<RVec3> out;
  for (const auto& v : enumerate_short(b, max_n)) out.push_back(over(v, lat.den()));
  return out;
}

std::vector<ExactMat3> point_group(const ExactLattice& lat) {
  auto b = reduce_integer_basis(integer_basis(lat));
  std::int64_t n[3] = {norm_sq(b[0]), norm_sq(b[1]), norm_sq(b[2])};
  auto all = enumerate_short(b, std::max({n[0], n[1], n[2]}));
  std::vector<IVec3> cand[3];
  for (const auto& v : all)
    for (int i = 0; i < 3; ++i)
      if (norm_sq(v) == n[i]) cand[i].push_back(v);
  const std::int64_t g01 = dot(b[0], b[1]), g02 = dot(b[0], b[2]), g12 = dot(b[1], b[2]);
  ExactMat3 binv = inverse(from_columns(to_rational(b[0]), to_rational(b[1]), to_rational(b[2])));
  std::set<ExactMat3, Mat3Less> found;
  for (const auto& v0 : cand[0])
    for (const auto& v1 : cand[1]) {
      if (dot(v0, v1) != g01) continue;
      for (const auto& v2 : cand[2]) {
        if (dot(v0, v2) != g02 || dot(v1, v2) != g12) continue;
        ExactMat3 q = mul(from_columns(to_rational(v0), to_rational(v1), to_rational(v2)), binv);
        if (!is_orthogonal(q)) throw Error("internal: Gram-preserving map is not orthogonal");
        found.insert(q);
      }
    }
  std::vector<ExactMat3> group(found.begin(), found.end());
  for (const auto& x : group)
    for (const auto& y : group)
      if (!found.count(mul(x, y))) throw Error("internal: point group is not closed");
  return group;
}

std::vector<ExactMat3> proper_part(const std::vector<ExactMat3>& group) {
  std::vector<ExactMat3> out;
  for (const auto& m : group)
    if (det(m) == Rational(1)) out.push_back(m);
  return out;
}

int residue_class(const IVec3& v) { return static_cast<int>(ck::floor_mod(norm_sq(v), 4)); }

ExactLattice cubic_lattice(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::cP: return ExactLattice();
    case LatticeKind::cI:
      return ExactLattice::from_integer_generators({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}}, 2);
    case LatticeKind::cF:
      return ExactLattice::from_integer_generators({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {0, 1, 1}}, 2);
  }
  throw Error("unknown lattice kind");
}

std::string to_json(const ExactLattice& lat) {
  nlohmann::json j;
  j["den"] = lat.den();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : lat.hnf()) rows.push_back({row[0], row[1], row[2]});
  j["hnf"] = rows;
  return j.dump();
}

ExactLattice lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid lattice JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("den") || !j.contains("hnf") || !j["den"].is_number_integer() ||
      !j["hnf"].is_array() || j["hnf"].size() != 3)
    throw Error("lattice JSON must have integer \"den\" and a 3x3 \"hnf\"");
  IMat3 h{};
  for (int i = 0; i < 3; ++i) {
    const auto& row = j["hnf"][static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) throw Error("lattice JSON \"hnf\" must be 3x3");
    for (int k = 0; k < 3; ++k) {
      if (!row[static_cast<std::size_t>(k)].is_number_integer()) throw Error("lattice JSON entries must be integers");
      h[i][k] = row[static_cast<std::size_t>(k)].get<std::int64_t>();
    }
  }
  std::int64_t den = j["den"].get<std::int64_t>();
  IColumns cols;
  for (int k = 0; k < 3; ++k) cols.push_back({h[0][k], h[1][k], h[2][k]});
  ExactLattice lat = ExactLattice::from_integer_generators(cols, den);
  if (lat.den() != den || lat.hnf() != h) throw Error("lattice JSON is not in canonical form");
  return lat;
}

}  // namespace cslkit
