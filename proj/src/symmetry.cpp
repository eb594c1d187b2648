#include "cslkit/symmetry.hpp"

#include <algorithm>
#include <set>

#include "cslkit/csl.hpp"
#include "cslkit/equivalence.hpp"

namespace cslkit {

namespace ck = checked;

const char* to_string(CrystalSystem s) {
  switch (s) {
    case CrystalSystem::Cubic: return "cubic";
    case CrystalSystem::Hexagonal: return "hexagonal";
    case CrystalSystem::Rhombohedral: return "rhombohedral";
    case CrystalSystem::Tetragonal: return "tetragonal";
    case CrystalSystem::Orthorhombic: return "orthorhombic";
    case CrystalSystem::Monoclinic: return "monoclinic";
    case CrystalSystem::Trivial: return "trivial";
  }
  return "?";
}

int proper_order(CrystalSystem s) {
  switch (s) {
    case CrystalSystem::Cubic: return 24;
    case CrystalSystem::Hexagonal: return 12;
    case CrystalSystem::Rhombohedral: return 6;
    case CrystalSystem::Tetragonal: return 8;
    case CrystalSystem::Orthorhombic: return 4;
    case CrystalSystem::Monoclinic: return 2;
    case CrystalSystem::Trivial: return 1;
  }
  return 0;
}

std::vector<Quat> group_closure(const std::vector<Quat>& generators) {
  constexpr std::size_t kMaxOrder = 1000;
  std::set<Quat> seen{Quat(1, 0, 0, 0)};
  std::vector<Quat> frontier{Quat(1, 0, 0, 0)};
  std::vector<Quat> gens;
  for (const auto& g : generators) gens.push_back(primitive_integral(g));
  while (!frontier.empty()) {
    std::vector<Quat> next;
    for (const auto& s : frontier)
      for (const auto& g : gens) {
        Quat p = primitive_integral(mul(s, g));
        if (seen.insert(p).second) next.push_back(p);
      }
    if (seen.size() > kMaxOrder) throw Error("group_closure: generators do not generate a finite point group");
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

// q in 432 with L(target) = q L(r), i.e. q r q' ~ target for some q' in 432.
Quat frame_conjugator(const Quat& r, const Quat& target) {
  const Quat t = primitive_integral(target);
  for (const auto& q : CubicGroup::elements()) {
    Quat qr = mul(q, r);
    for (const auto& q2 : CubicGroup::elements())
      if (primitive_integral(mul(qr, q2)) == t) return q;
  }
  throw Error("internal: " + r.str() + " is not equivalent to " + target.str());
}

struct StandardGroup {
  CrystalSystem system;
  Quat frame;  // the quaternion whose CSL the generators refer to
  std::vector<Quat> gens;
};

void finish(SymmetryGroup& g, const Quat& r, const StandardGroup& sg) {
  g.system = sg.system;
  g.form = sg.frame;
  g.standard_generators = sg.gens;
  const Quat key = primitive_integral(r);
  if (key == primitive_integral(sg.frame)) {
    g.generators = sg.gens;
  } else {
    const Quat q = frame_conjugator(r, sg.frame);
    const Quat qc = conj(q);
    for (const auto& s : sg.gens) g.generators.push_back(primitive_integral(mul(mul(qc, s), q)));
  }
  g.elements = group_closure(g.generators);
  g.order = static_cast<int>(g.elements.size());
}

StandardGroup minimal_standard(const FormClass& fc, std::int64_t sig) {
  const std::int64_t m = fc.m, n = fc.n;
  switch (fc.tag) {
    case FormTag::Unit: return {CrystalSystem::Cubic, Quat(1, 0, 0, 0), {Quat(1, 1, 0, 0), Quat(1, 1, 1, 1)}};
    case FormTag::Sixfold: return {CrystalSystem::Hexagonal, Quat(3, 1, 1, 1), {Quat(3, 1, 1, 1), Quat(0, 1, -1, 0)}};
    case FormTag::AxisMNNN:
      return {CrystalSystem::Rhombohedral, fc.form,
              {Quat(1, 1, 1, 1), Quat(0, ck::add(n, m), ck::sub(n, m), ck::mul(-2, n))}};
    case FormTag::AxisMN00: return {CrystalSystem::Tetragonal, fc.form, {Quat(1, 1, 0, 0), Quat(0, 0, m, n)}};
    case FormTag::AxisMNN0: return {CrystalSystem::Orthorhombic, fc.form, {Quat(0, 1, 1, 0), Quat(0, n, -n, m)}};
    case FormTag::VectorialGeneral: return {CrystalSystem::Monoclinic, fc.form, {fc.form}};
    case FormTag::General: return {CrystalSystem::Trivial, fc.form, {}};
  }
  (void)sig;
  return {CrystalSystem::Trivial, fc.form, {}};
}

bool is_prime_power(std::int64_t n) { return n > 1 && factorize(n).size() == 1; }

}  // namespace

SymmetryGroup minimal_symmetry_group(const Quat& r) {
  FormClass fc = classify_form(r);
  SymmetryGroup g;
  finish(g, r, minimal_standard(fc, sigma(r).sigma));
  return g;
}

std::vector<Quat> minimal_symmetry_elements(const Quat& r_in) {
  const Quat r = primitive_integral(r_in);
  std::vector<Quat> gens;
  const Quat rc = conj(r);
  for (const auto& q : CubicGroup::elements()) {
    if (CubicGroup::contains(mul(mul(rc, q), r))) gens.push_back(q);
    Quat rq = mul(r, q);
    if (CubicGroup::contains(mul(rq, rq))) gens.push_back(primitive_integral(rq));
  }
  return group_closure(gens);
}

bool is_symmetry_operation(const Quat& q_in, const Quat& r_in, LatticeKind kind) {
  const Quat q = primitive_integral(q_in), r = primitive_integral(r_in);
  const Quat qr = primitive_integral(mul(q, r));
  const ExactLattice lr = csl(kind, r);
  const bool ok = is_sublattice(lr, csl(kind, q)) && is_sublattice(lr, csl(kind, qr));
  if (ok) {
    const std::int64_t s = sigma(r).sigma;
    if (s % sigma(q).sigma != 0 || s % sigma(qr).sigma != 0)
      throw Error("internal: symmetry operation " + q.str() + " of " + r.str() + " violates Σ divisibility");
  }
  return ok;
}

bool axis_symmetry_test(const Quat& r_in) {
  const Quat r = primitive_integral(r_in);
  const IVec3 v = r.vector_num();
  if (v == IVec3{0, 0, 0}) throw Error("axis_symmetry_test needs a nonzero vector part");
  const IVec3 q = primitive_direction(v);
  const std::int64_t two_r0 = ck::mul(2, r.num(0));
  return two_r0 % norm_sq(q) == 0;
}

namespace {

// Basis of the plane lattice {x in Z^3 : x·v = 0} for primitive v.
std::pair<IVec3, IVec3> orthogonal_basis(const IVec3& v) {
  const auto [a, b, c] = v;
  if (a == 0 && b == 0) return {IVec3{1, 0, 0}, IVec3{0, 1, 0}};
  const auto [g, x, y] = ck::ext_gcd(a, b);  // a x + b y = g > 0
  IVec3 u{b / g, -a / g, 0};
  IVec3 w{ck::mul(c, x), ck::mul(c, y), -g};
  if (norm_sq(cross(u, w)) != norm_sq(v)) throw Error("internal: orthogonal basis has wrong covolume");
  return {u, w};
}

// Lagrange reduction of a 2D basis.
void reduce2(IVec3& u, IVec3& w) {
  for (;;) {
    if (norm_sq(w) < norm_sq(u)) std::swap(u, w);
    const std::int64_t nu = norm_sq(u);
    const std::int64_t k = ck::floor_div(ck::add(ck::mul(2, dot(u, w)), nu), ck::mul(2, nu));
    if (k == 0) return;
    w = sub(w, scale(u, k));
    if (norm_sq(w) >= norm_sq(u)) return;
  }
}

}  // namespace

std::vector<OrthDecomposition> all_orthogonal_decompositions(const Quat& r) {
  if (!r.is_integral() || r.num(0) != 0) throw Error("decompose_orthogonal needs a vectorial quaternion, got " + r.str());
  IVec3 v = r.vector_num();
  if (v == IVec3{0, 0, 0}) throw Error("decompose_orthogonal needs a nonzero quaternion");
  const std::int64_t c = content(v);
  for (auto& x : v) x /= c;
  const std::int64_t nr = norm_sq(v);
  const std::int64_t bound = ck::mul(4, nr);

  auto [u, w] = orthogonal_basis(v);
  reduce2(u, w);
  const std::int64_t uu = norm_sq(u), ww = norm_sq(w), uw = dot(u, w);
  const std::int64_t gram = ck::sub(ck::mul(uu, ww), ck::mul(uw, uw));  // = nr
  // a^2 * gram <= bound * ww and b^2 * gram <= bound * uu.
  const std::int64_t amax = ck::isqrt(ck::mul(bound, ww) / gram);
  const std::int64_t bmax = ck::isqrt(ck::mul(bound, uu) / gram);

  std::vector<OrthDecomposition> out;
  for (std::int64_t a = -amax; a <= amax; ++a)
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      if (ck::gcd(a, b) != 1) continue;
      IVec3 q = add(scale(u, a), scale(w, b));
      if (primitive_direction(q) != q) continue;
      const std::int64_t nq = norm_sq(q);
      if (nq > bound) continue;
      const IVec3 x = cross(v, q);
      OrthDecomposition d;
      IVec3 m;
      if (x[0] % nq == 0 && x[1] % nq == 0 && x[2] % nq == 0) {
        m = {x[0] / nq, x[1] / nq, x[2] / nq};
      } else if (ck::mul(2, x[0]) % nq == 0 && ck::mul(2, x[1]) % nq == 0 && ck::mul(2, x[2]) % nq == 0) {
        m = {2 * x[0] / nq, 2 * x[1] / nq, 2 * x[2] / nq};
        d.ell = 1;
      } else {
        continue;
      }
      if (ck::gcd(odd_part(nq), odd_part(norm_sq(m))) != 1) continue;
      d.q = Quat(0, q[0], q[1], q[2]);
      d.m = Quat(0, m[0], m[1], m[2]);
      out.push_back(d);
    }
  std::sort(out.begin(), out.end(), [](const OrthDecomposition& x, const OrthDecomposition& y) {
    auto nx = norm_sq(x.q), ny = norm_sq(y.q);
    if (nx != ny) return nx < ny;
    return x.q < y.q;
  });
  return out;
}

std::optional<OrthDecomposition> decompose_orthogonal(const Quat& r) {
  auto all = all_orthogonal_decompositions(r);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::int64_t count_orthogonal_decompositions(const Quat& r) {
  std::set<std::pair<IVec3, IVec3>> pairs;
  for (const auto& d : all_orthogonal_decompositions(r)) {
    IVec3 a = primitive_direction(d.q.vector_num()), b = primitive_direction(d.m.vector_num());
    if (b < a) std::swap(a, b);
    pairs.insert({a, b});
  }
  return static_cast<std::int64_t>(pairs.size());
}

SymmetryGroup symmetry_group(const Quat& r) {
  const FormClass fc = classify_form(r);
  const std::int64_t sig = sigma(r).sigma;
  StandardGroup sg = minimal_standard(fc, sig);
  switch (fc.tag) {
    case FormTag::General:
      throw Error("general case not covered by the twofold classification: " + primitive_integral(r).str() +
                  " is not equivalent to a twofold rotation");
    case FormTag::AxisMNNN:
      if (sig % 3 == 0) {
        sg.system = CrystalSystem::Hexagonal;
        sg.gens[0] = Quat(3, 1, 1, 1);
      }
      break;
    case FormTag::VectorialGeneral:
      if (!is_prime_power(sig)) {
        if (auto d = decompose_orthogonal(fc.form)) {
          sg.system = CrystalSystem::Orthorhombic;
          sg.gens.push_back(d->q);
        }
      }
      break;
    default: break;
  }
  SymmetryGroup g;
  finish(g, r, sg);
  if (g.order != proper_order(g.system))
    throw Error("internal: symmetry group of " + r.str() + " has order " + std::to_string(g.order));
  for (const auto& q : g.generators)
    if (!is_symmetry_operation(q, r)) throw Error("internal: generator " + q.str() + " is not a symmetry of " + r.str());
  return g;
}

bool coprime_factor_check(const Quat& r, const Quat& q) {
  const RQuat prod = mul(conj(to_rquat(q)), to_rquat(r));
  const Rational nq = norm_sq(q);
  RQuat m;
  for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)] / nq;
  if (!is_half_integral(m)) return false;
  return ck::gcd(sigma(q).sigma, sigma(primitive_integral(m)).sigma) == 1;
}

}  // namespace cslkit
