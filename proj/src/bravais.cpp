#include "cslkit/bravais.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "cslkit/csl.hpp"
#include "cslkit/equivalence.hpp"
#include "cslkit/symmetry.hpp"

namespace cslkit {

namespace ck = checked;

namespace {

BravaisReport make(std::string symbol, std::optional<Rational> a2, std::optional<Rational> b2,
                   std::optional<Rational> c2, std::string note = {}) {
  BravaisReport b;
  b.symbol = std::move(symbol);
  b.a2 = std::move(a2);
  b.b2 = std::move(b2);
  b.c2 = std::move(c2);
  b.setting_note = std::move(note);
  return b;
}

bool in_l2_half(const IVec3& twice) {
  // ½·twice ∈ L2: integral with squared length ≡ 2 (mod 4).
  for (auto x : twice)
    if (x % 2 != 0) return false;
  return residue_class({twice[0] / 2, twice[1] / 2, twice[2] / 2}) == 2;
}

const char* cubic_symbol(LatticeKind k) {
  switch (k) {
    case LatticeKind::cP: return "cP";
    case LatticeKind::cI: return "cI";
    case LatticeKind::cF: return "cF";
  }
  return "?";
}

BravaisReport monoclinic(LatticeKind kind, const Quat& form) {
  const std::int64_t r2 = norm_sq(form.vector_num());
  bool primitive = kind == LatticeKind::cP ? (r2 % 2 == 1) : (r2 % 4 == 3);
  RVec3 c = axis_vector(csl(kind, form), form.vector_num());
  return make(primitive ? "mP" : "mC", std::nullopt, std::nullopt, norm_sq(c),
              "c along the twofold axis; a, b and beta are not fixed by the class");
}

}  // namespace

int centering_index(const std::string& symbol) {
  if (symbol.size() != 2) throw Error("unknown Bravais symbol '" + symbol + "'");
  switch (symbol[1]) {
    case 'P': return 1;
    case 'C':
    case 'I': return 2;
    case 'F': return 4;
    case 'R': return 3;
    default: throw Error("unknown Bravais symbol '" + symbol + "'");
  }
}

BravaisReport bravais(LatticeKind kind, const Quat& r) {
  const FormClass fc = classify_form(r);
  const Rational s(sigma(r).sigma);
  const bool p = kind == LatticeKind::cP, i = kind == LatticeKind::cI;
  switch (fc.tag) {
    case FormTag::General:
      throw Error("bravais: " + primitive_integral(r).str() +
                  " is not equivalent to a twofold rotation; no closed-form Bravais class");
    case FormTag::Unit: return make(cubic_symbol(kind), Rational(1), Rational(1), Rational(1), "the lattice itself");
    case FormTag::Sixfold:
    case FormTag::AxisMNNN: {
      const bool hex = fc.tag == FormTag::Sixfold || s.num() % 3 == 0;
      const Rational c2 = i ? Rational(3, 4) : Rational(3);
      Rational a2 = hex ? s * 2 / 3 : s * 2;
      if (kind == LatticeKind::cF) a2 = hex ? s / 6 : s / 2;
      if (hex) return make("hP", a2, a2, c2);
      return make("hR", a2, a2, c2, "triple hexagonal setting");
    }
    case FormTag::AxisMN00:
      if (p) return make("tP", s, s, Rational(1));
      if (i) return make("tI", s, s, Rational(1));
      return make("tI", s / 2, s / 2, Rational(1));
    case FormTag::AxisMNN0: {
      const std::int64_t m = fc.m, n = fc.n;
      if (p) return make("oC", Rational(2), s, s * 2, "B-face centred");
      if (i) {
        if ((m % 2 != 0 && n % 2 == 0) || m % 4 == 0) return make("oF", Rational(2), s, s * 2);
        return make("oC", Rational(2), s / 4, s * 2, "B-face centred");
      }
      if ((m % 2 != 0 && n % 2 == 0) || m % 4 == 0) return make("oI", Rational(1, 2), s / 2, s);
      return make("oC", Rational(1, 2), s / 2, s, "C-face centred");
    }
    case FormTag::VectorialGeneral: break;
  }

  const Quat& form = fc.form;
  const bool prime_power = factorize(s.num()).size() == 1;
  std::optional<OrthDecomposition> d;
  if (!prime_power) d = decompose_orthogonal(form);
  if (!d) return monoclinic(kind, form);

  IVec3 rv = form.vector_num(), qv = d->q.vector_num(), mv = d->m.vector_num();
  const std::int64_t r2 = norm_sq(rv);
  if (r2 % 2 == 0 && norm_sq(qv) % 2 == 1) {
    std::swap(qv, mv);
    mv = scale(mv, -1);
  }
  const Rational q2(norm_sq(qv));
  const bool q_even = norm_sq(qv) % 2 == 0, m_even = norm_sq(mv) % 2 == 0;
  if (r2 % 2 == 1 && !q_even && !m_even) {
    if (p) return make("oP", q2, s / q2, s);
    if (i) return make("oI", q2, s / q2, s);
    return make("oF", q2, s / q2, s);
  }
  if (r2 % 2 == 0 && q_even && !m_even) {
    if (p) return make("oC", q2, s * 2 / q2, s * 2, "B-face centred");
    if (i) {
      if (residue_class(mv) == 3) return make("oC", q2, s / (q2 * 2), s * 2, "B-face centred");
      return make("oF", q2, s * 2 / q2, s * 2);
    }
    if (in_l2_half(add(rv, qv))) return make("oC", q2 / 4, s * 2 / q2, s / 2, "B-face centred");
    return make("oI", q2 / 4, s * 2 / q2, s / 2);
  }
  if (r2 % 2 == 1 && q_even && m_even) {
    if (p) return make("oC", q2, s * 4 / q2, s, "C-face centred");
    if (i) {
      if (residue_class(rv) == 3) return make("oC", q2, s * 4 / q2, s / 4, "C-face centred");
      return make("oF", q2, s * 4 / q2, s);
    }
    if (in_l2_half(add(qv, mv))) return make("oC", q2 / 4, s / q2, s, "C-face centred");
    return make("oI", q2 / 4, s / q2, s);
  }
  throw Error("internal: unexpected parities in the decomposition of " + form.str());
}

RVec3 axis_vector(const ExactLattice& lat, const IVec3& d) {
  if (d == IVec3{0, 0, 0}) throw Error("axis_vector needs a nonzero direction");
  const RVec3 x = mul(inverse(lat.basis_matrix()), to_rational(d));
  std::int64_t l = 1, g = 0;
  for (const auto& c : x) {
    l = ck::lcm(l, c.den());
    g = ck::gcd(g, c.num());
  }
  return scale(to_rational(d), Rational(l, g));
}

namespace {

struct Axis {
  IVec3 dir;
  int fold;
};

std::vector<Axis> rotation_axes(const std::vector<ExactMat3>& proper) {
  std::map<IVec3, int> axes;
  for (const auto& g : proper) {
    Quat q = primitive_integral(quaternion_from_matrix(g));
    if (q.vector_num() == IVec3{0, 0, 0}) continue;
    const IVec3 dir = primitive_direction(q.vector_num());
    const Rational c = axis_angle(q).cos_phi;
    int fold = 2;
    if (c == Rational(0)) fold = 4;
    else if (c == Rational(1, 2)) fold = 6;
    else if (c == Rational(-1, 2)) fold = 3;
    int& f = axes[dir];
    f = std::max(f, fold);
  }
  std::vector<Axis> out;
  for (const auto& [d, f] : axes) out.push_back({d, f});
  return out;
}

// Lattice vectors orthogonal to d, enough to contain the two successive minima of that plane.
std::vector<RVec3> perpendicular_vectors(const ExactLattice& lat, const IVec3& d) {
  Rational bound(0);
  for (const auto& b : reduced_basis(lat)) bound = std::max(bound, norm_sq(b));
  const RVec3 dr = to_rational(d);
  for (;;) {
    std::vector<RVec3> out;
    for (const auto& v : short_vectors(lat, bound))
      if (dot(v, dr).is_zero()) out.push_back(v);
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = a + 1; b < out.size(); ++b)
        if (!norm_sq(cross(out[a], out[b])).is_zero()) return out;
    bound = bound * 2;
  }
}

// Gram determinant of the plane lattice spanned by the vectors (sorted by norm).
Rational plane_gram(const std::vector<RVec3>& vs) {
  const RVec3& u = vs.front();
  for (const auto& w : vs) {
    Rational g = norm_sq(u) * norm_sq(w) - dot(u, w) * dot(u, w);
    if (!g.is_zero()) return g;
  }
  throw Error("internal: degenerate plane");
}

Rational cell_index(const ExactLattice& lat, const RVec3& a, const RVec3& b, const RVec3& c) {
  return abs(det(from_columns(a, b, c))) / lat.volume();
}

RVec3 half_sum(std::initializer_list<RVec3> vs) {
  RVec3 s{Rational(0), Rational(0), Rational(0)};
  for (const auto& v : vs) s = add(s, v);
  return scale(s, Rational(1, 2));
}

}  // namespace

BravaisReport oracle_bravais(const ExactLattice& lat) {
  const auto proper = proper_part(point_group(lat));
  const auto axes = rotation_axes(proper);
  BravaisReport out;
  out.source = "oracle";
  auto with = [&](int fold) {
    for (const auto& a : axes)
      if (a.fold == fold) return a.dir;
    throw Error("internal: missing rotation axis");
  };
  switch (proper.size()) {
    case 24: {
      std::vector<RVec3> v;
      for (const auto& a : axes)
        if (a.fold == 4) v.push_back(axis_vector(lat, a.dir));
      const Rational idx = cell_index(lat, v[0], v[1], v[2]);
      out.symbol = idx == Rational(1) ? "cP" : idx == Rational(2) ? "cI" : "cF";
      out.a2 = out.b2 = out.c2 = norm_sq(v[0]);
      return out;
    }
    case 12:
    case 6: {
      const IVec3 d = with(proper.size() == 12 ? 6 : 3);
      out.symbol = proper.size() == 12 ? "hP" : "hR";
      out.a2 = out.b2 = norm_sq(perpendicular_vectors(lat, d).front());
      out.c2 = norm_sq(axis_vector(lat, d));
      if (out.symbol == "hR") out.setting_note = "triple hexagonal setting";
      return out;
    }
    case 8: {
      const IVec3 d = with(4);
      const RVec3 c = axis_vector(lat, d);
      std::optional<Rational> best;
      RVec3 best_a;
      for (const auto& ax : axes) {
        if (ax.fold != 2 || dot(ax.dir, d) != 0) continue;
        RVec3 a = axis_vector(lat, ax.dir);
        RVec3 b = axis_vector(lat, cross(d, ax.dir));
        Rational idx = cell_index(lat, a, b, c);
        if (!best || idx < *best) {
          best = idx;
          best_a = a;
        }
      }
      out.symbol = *best == Rational(1) ? "tP" : "tI";
      out.a2 = out.b2 = norm_sq(best_a);
      out.c2 = norm_sq(c);
      return out;
    }
    case 4: {
      std::vector<RVec3> v;
      for (const auto& a : axes) v.push_back(axis_vector(lat, a.dir));
      std::sort(v.begin(), v.end(), [](const RVec3& x, const RVec3& y) { return norm_sq(x) < norm_sq(y); });
      const Rational idx = cell_index(lat, v[0], v[1], v[2]);
      if (idx == Rational(1)) out.symbol = "oP";
      else if (idx == Rational(4)) out.symbol = "oF";
      else if (contains(lat, half_sum({v[0], v[1], v[2]}))) out.symbol = "oI";
      else {
        out.symbol = "oC";
        // Put the centred face in the ab plane.
        if (contains(lat, half_sum({v[1], v[2]}))) std::rotate(v.begin(), v.begin() + 1, v.end());
        else if (contains(lat, half_sum({v[0], v[2]}))) std::swap(v[1], v[2]);
        out.setting_note = "C-face centred";
      }
      out.a2 = norm_sq(v[0]);
      out.b2 = norm_sq(v[1]);
      out.c2 = norm_sq(v[2]);
      return out;
    }
    case 2: {
      const IVec3 d = axes.front().dir;
      const RVec3 c = axis_vector(lat, d);
      const Rational idx2 = plane_gram(perpendicular_vectors(lat, d)) * norm_sq(c) / (lat.volume() * lat.volume());
      out.symbol = idx2 == Rational(1) ? "mP" : "mC";
      out.c2 = norm_sq(c);
      out.setting_note = "c along the twofold axis; a, b and beta are not fixed by the class";
      return out;
    }
    default: out.symbol = "aP"; return out;
  }
}

bool conventional_cell_check(LatticeKind kind, const Quat& r, const BravaisReport& rep) {
  const ExactLattice lat = csl_oracle(kind, r);
  const Rational vol = lat.volume();
  const std::string& sym = rep.symbol;
  if (sym.size() != 2) return false;
  const char sys = sym[0];
  if (sys == 'a') return proper_part(point_group(lat)).size() == 1;
  int idx = 0;
  try {
    idx = centering_index(sym);
  } catch (const Error&) {
    return false;
  }
  if (!rep.c2) return false;
  for (const auto& x : {rep.a2, rep.b2, rep.c2})
    if (x && x->sign() <= 0) return false;

  if (sys == 'm') {
    if (idx != 1 && idx != 2) return false;
    for (const auto& c : short_vectors(lat, *rep.c2)) {
      if (norm_sq(c) != *rep.c2) continue;
      const IVec3 d = integer_direction(c);
      if (axis_vector(lat, d) != c && axis_vector(lat, d) != scale(c, Rational(-1))) continue;
      // Twofold rotation about c: v -> 2 (v·c) c / c² - v.
      const ExactMat3 rot = cayley(Quat(0, d[0], d[1], d[2]));
      if (transform(rot, lat) != lat) continue;
      const Rational idx2 = plane_gram(perpendicular_vectors(lat, d)) * norm_sq(c) / (vol * vol);
      if (idx2 == Rational(idx * idx)) return true;
    }
    return false;
  }
  if (!rep.a2) return false;

  if (sys == 'h') {
    if (idx != 1 && idx != 3) return false;
    const Rational a2 = *rep.a2, c2 = *rep.c2;
    const auto vs = short_vectors(lat, std::max(a2, c2));
    std::vector<RVec3> as, cs;
    for (const auto& v : vs) {
      if (norm_sq(v) == a2) as.push_back(v);
      if (norm_sq(v) == c2) cs.push_back(v);
    }
    for (const auto& a1 : as)
      for (const auto& a2v : as) {
        if (dot(a1, a2v) != -a2 / 2) continue;
        for (const auto& c : cs) {
          if (!dot(c, a1).is_zero() || !dot(c, a2v).is_zero()) continue;
          if (cell_index(lat, a1, a2v, c) == Rational(idx)) return true;
        }
      }
    return false;
  }

  if (sys != 'o' && sys != 't' && sys != 'c') return false;
  const Rational a2 = *rep.a2, b2 = rep.b2 ? *rep.b2 : *rep.a2, c2 = *rep.c2;
  if (sys == 't' && a2 != b2) return false;
  if (sys == 'c' && (a2 != b2 || a2 != c2)) return false;
  if (sym[1] == 'R') return false;
  const auto vs = short_vectors(lat, std::max({a2, b2, c2}));
  auto with_norm = [&](const Rational& n) {
    std::vector<RVec3> out;
    for (const auto& v : vs)
      if (norm_sq(v) == n) out.push_back(v);
    return out;
  };
  const auto as = with_norm(a2), bs = with_norm(b2), cs = with_norm(c2);
  for (const auto& a : as)
    for (const auto& b : bs) {
      if (!dot(a, b).is_zero()) continue;
      for (const auto& c : cs) {
        if (!dot(a, c).is_zero() || !dot(b, c).is_zero()) continue;
        if (cell_index(lat, a, b, c) != Rational(idx)) continue;
        const bool body = contains(lat, half_sum({a, b, c}));
        const int faces = int(contains(lat, half_sum({a, b}))) + int(contains(lat, half_sum({b, c}))) +
                          int(contains(lat, half_sum({a, c})));
        bool ok = false;
        switch (sym[1]) {
          case 'P': ok = true; break;
          case 'I': ok = body; break;
          case 'C': ok = faces == 1; break;
          case 'F': ok = faces == 3; break;
        }
        if (ok) return true;
      }
    }
  return false;
}

bool conventional_cell_check(LatticeKind kind, const Quat& r) {
  return conventional_cell_check(kind, r, bravais(kind, r));
}

std::vector<TableRow> table(std::int64_t max_sigma, const std::vector<LatticeKind>& kinds) {
  if (max_sigma < 3) throw Error("table needs max_sigma >= 3");
  std::vector<TableRow> rows;
  for (std::int64_t s = 3; s <= max_sigma; s += 2) {
    const auto classes = enumerate_classes(s);
    std::vector<TableRow> here;
    std::set<Quat> done;
    for (const auto& c : classes) {
      if (done.count(c.canonical)) continue;
      TableRow row;
      row.sigma = s;
      row.canonical.push_back(c.canonical);
      row.representatives.push_back(c.form.form);
      done.insert(c.canonical);
      if (c.paired) {
        for (const auto& other : classes)
          if (other.canonical == c.partner) {
            row.canonical.push_back(other.canonical);
            row.representatives.push_back(other.form.form);
            done.insert(other.canonical);
          }
        // Positive real part first, as printed.
        if (row.representatives.size() == 2 && row.representatives[0].num(0) < row.representatives[1].num(0)) {
          std::swap(row.representatives[0], row.representatives[1]);
          std::swap(row.canonical[0], row.canonical[1]);
        }
      }
      row.kinds = kinds;
      for (LatticeKind k : kinds) {
        if (c.form.tag == FormTag::General) row.reports.push_back(oracle_bravais(csl(k, c.canonical)));
        else row.reports.push_back(bravais(k, c.canonical));
      }
      here.push_back(std::move(row));
    }
    std::sort(here.begin(), here.end(), [](const TableRow& a, const TableRow& b) {
      return *std::min_element(a.canonical.begin(), a.canonical.end()) <
             *std::min_element(b.canonical.begin(), b.canonical.end());
    });
    for (auto& r : here) rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::string reps_text(const TableRow& row) {
  std::string s;
  for (const auto& q : row.representatives) {
    if (!s.empty()) s += ' ';
    s += q.str();
  }
  return s;
}

std::string opt(const std::optional<Rational>& x) { return x ? x->str() : ""; }

}  // namespace

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "sigma,quaternion";
  if (!rows.empty()) {
    for (LatticeKind k : rows.front().kinds) os << ',' << to_string(k);
    for (LatticeKind k : rows.front().kinds) {
      const std::string n = to_string(k);
      os << ',' << n << "_a2," << n << "_b2," << n << "_c2";
    }
  }
  os << '\n';
  for (const auto& row : rows) {
    os << row.sigma << ",\"" << reps_text(row) << '"';
    for (const auto& r : row.reports) os << ',' << r.symbol;
    for (const auto& r : row.reports) os << ',' << opt(r.a2) << ',' << opt(r.b2) << ',' << opt(r.c2);
    os << '\n';
  }
  return os.str();
}

std::string table_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| Σ | r |";
  if (!rows.empty())
    for (LatticeKind k : rows.front().kinds) os << ' ' << to_string(k) << " |";
  os << "\n|---|---|";
  if (!rows.empty())
    for (std::size_t i = 0; i < rows.front().kinds.size(); ++i) os << "---|";
  os << '\n';
  std::vector<const TableRow*> paired;
  for (const auto& row : rows) {
    os << "| " << row.sigma << " | " << reps_text(row) << " |";
    for (const auto& r : row.reports) os << ' ' << r.symbol << " |";
    os << '\n';
    if (row.representatives.size() > 1) paired.push_back(&row);
  }
  if (!paired.empty()) {
    os << '\n';
    for (const TableRow* row : paired)
      os << "Σ=" << row->sigma << ": " << row->representatives[0].str() << " and " << row->representatives[1].str()
         << " are R and R⁻¹ of two inequivalent classes; neither is equivalent to a twofold rotation, "
            "so the symbols come from the lattice oracle.\n";
  }
  return os.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["sigma"] = row.sigma;
    j["representatives"] = nlohmann::ordered_json::array();
    for (const auto& q : row.representatives) j["representatives"].push_back(q.str());
    j["classes"] = row.representatives.size();
    nlohmann::ordered_json ks = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.kinds.size(); ++i) {
      const auto& r = row.reports[i];
      nlohmann::ordered_json e;
      e["symbol"] = r.symbol;
      e["a2"] = r.a2 ? nlohmann::ordered_json(r.a2->str()) : nlohmann::ordered_json(nullptr);
      e["b2"] = r.b2 ? nlohmann::ordered_json(r.b2->str()) : nlohmann::ordered_json(nullptr);
      e["c2"] = r.c2 ? nlohmann::ordered_json(r.c2->str()) : nlohmann::ordered_json(nullptr);
      e["note"] = r.setting_note;
      e["source"] = r.source;
      ks[to_string(row.kinds[i])] = e;
    }
    j["kinds"] = ks;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace cslkit
