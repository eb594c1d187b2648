#include "cslkit/csl.hpp"

#include <vector>

namespace cslkit {

namespace ck = checked;

CslVectors csl_vectors(const Quat& r) {
  Quat p = primitive_integral(r);
  const std::int64_t r0 = p.num(0), r1 = p.num(1), r2 = p.num(2), r3 = p.num(3);
  return {{IVec3{r1, r2, r3}, IVec3{r0, r3, -r2}, IVec3{-r3, r0, r1}, IVec3{r2, -r1, r0}}};
}

SigmaInfo sigma(const Quat& r) {
  std::int64_t n = norm_sq(primitive_integral(r)).to_integer();
  int ell = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++ell;
  }
  return {n, ell};
}

namespace {

std::int64_t norm_of(const Quat& r) { return norm_sq(primitive_integral(r)).to_integer(); }

// Generators are collected with a common denominator `den` (2 or 4).
struct Gens {
  std::int64_t den;
  IColumns cols;
  void add(const IVec3& v, std::int64_t numerator_scale) { cols.push_back(scale(v, numerator_scale)); }
  ExactLattice lattice() const { return ExactLattice::from_integer_generators(cols, den); }
};

IVec3 sum4(const CslVectors& c) { return add(add(c[0], c[1]), add(c[2], c[3])); }

}  // namespace

ExactLattice csl_basis_primitive(const Quat& r) {
  const CslVectors c = csl_vectors(r);
  const std::int64_t n = norm_of(r);
  Gens g{2, {}};
  if (n % 2 == 1) {
    for (int i = 0; i < 4; ++i) g.add(c[i], 2);
  } else if (n % 4 == 2) {
    for (int i = 0; i < 4; ++i) g.add(c[i], 2);
    g.add(sum4(c), 1);
  } else {
    g.add(c[0], 2);
    for (int i = 1; i < 4; ++i) g.add(add(c[0], c[i]), 1);
  }
  return g.lattice();
}

ExactLattice csl_basis_bcc(const Quat& r) {
  const CslVectors c = csl_vectors(r);
  const std::int64_t n = norm_of(r);
  Gens g{2, {}};
  if (n % 2 == 1) {
    for (int i = 0; i < 4; ++i) g.add(c[i], 2);
    g.add(sum4(c), 1);
  } else if (n % 4 == 2) {
    g.add(c[0], 2);
    for (int i = 1; i < 4; ++i) g.add(add(c[0], c[i]), 1);
  } else {
    for (int i = 0; i < 4; ++i) g.add(c[i], 1);
  }
  return g.lattice();
}

ExactLattice csl_basis_fcc(const Quat& r) {
  const Quat p = primitive_integral(r);
  const CslVectors c = csl_vectors(p);
  const std::int64_t n = norm_of(p);
  auto odd = [](std::int64_t x) { return (x & 1) != 0; };
  Gens g{4, {}};
  switch (n % 4) {
    case 3:
      for (int i = 0; i < 4; ++i) g.add(c[i], odd(p.num(i)) ? 2 : 4);
      break;
    case 1:
      for (int i = 0; i < 4; ++i) g.add(c[i], 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (!odd(p.num(i) + p.num(j))) g.add(add(c[i], c[j]), 2);
      break;
    case 2: {
      const std::int64_t h = ck::sub(ck::sub(p.num(0), p.num(1)), ck::add(p.num(2), p.num(3))) / 2;
      const IVec3 s = sum4(c);
      for (int i = 0; i < 4; ++i) {
        g.add(c[i], odd(p.num(i)) ? 4 : 2);
        const bool m_odd = odd(ck::sub(h, p.num(i)));
        g.add(add(s, scale(c[i], 2)), m_odd ? 2 : 1);
      }
      break;
    }
    default:
      g.add(c[0], 4);
      for (int i = 1; i < 4; ++i) {
        const std::int64_t e = ck::floor_div(ck::sub(p.num(0), p.num(i)), 2);
        g.add(add(c[0], scale(c[i], odd(e) ? -1 : 1)), 1);
      }
      break;
  }
  return g.lattice();
}

ExactLattice csl(LatticeKind kind, const Quat& r) {
  switch (kind) {
    case LatticeKind::cP: return csl_basis_primitive(r);
    case LatticeKind::cI: return csl_basis_bcc(r);
    case LatticeKind::cF: return csl_basis_fcc(r);
  }
  throw Error("unknown lattice kind");
}

ExactLattice csl_oracle(LatticeKind kind, const Quat& r) {
  ExactLattice l = cubic_lattice(kind);
  return intersect(l, transform(cayley(r), l));
}

bool membership_coeff_check(const Quat& r, const RQuat& m) {
  if (!is_half_integral(m)) throw Error("coefficients must be integers or half-integers");
  const Quat p = primitive_integral(r);
  const std::int64_t n = norm_of(p);
  const RQuat rho{Rational(p.num(0)), Rational(-p.num(1)), Rational(-p.num(2)), Rational(-p.num(3))};
  auto admissible = [&](const RQuat& c) {
    if (n % 2 == 1) {
      for (const auto& x : c)
        if (!x.is_integer()) return false;
      return true;
    }
    if (!(c[0] + c[1] + c[2] + c[3]).is_integer()) return false;
    if (n % 4 == 2) {
      Rational even_sum;
      for (int i = 0; i < 4; ++i)
        if (p.num(i) % 2 == 0) even_sum += c[static_cast<std::size_t>(i)];
      if (!even_sum.is_integer()) return false;
    }
    return true;
  };
  // Coefficients are defined modulo the dependency r0 r^(0) - r1 r^(1) - r2 r^(2) - r3 r^(3) = 0;
  // shifts by multiples of ½ of it keep m in ½Z, integer shifts keep the constraints.
  RQuat shifted{};
  for (int i = 0; i < 4; ++i) shifted[i] = m[i] + rho[i] * Rational(1, 2);
  return admissible(m) || admissible(shifted);
}

bool membership_coeff_check(const Quat& r, const Quat& m) { return membership_coeff_check(r, to_rquat(m)); }

}  // namespace cslkit
