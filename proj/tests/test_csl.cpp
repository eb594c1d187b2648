#include <vector>

#include "cslkit/csl.hpp"
#include "doctest.h"

using namespace cslkit;

namespace {

// Sign-canonical primitive quaternions with Σ <= max_sigma, by brute force over the 4-ball.
std::vector<Quat> small_rotations(std::int64_t max_sigma) {
  std::vector<Quat> out;
  const std::int64_t lim = 4 * max_sigma;
  const std::int64_t b = checked::isqrt(lim);
  for (std::int64_t a = -b; a <= b; ++a)
    for (std::int64_t c = -b; c <= b; ++c)
      for (std::int64_t d = -b; d <= b; ++d)
        for (std::int64_t e = -b; e <= b; ++e) {
          Quat q(a, c, d, e);
          if (q.is_zero() || !q.is_primitive() || sign_canonical(q) != q) continue;
          if (norm_sq(q) > Rational(lim)) continue;
          if (sigma(q).sigma <= max_sigma) out.push_back(q);
        }
  return out;
}

RVec3 half(const IVec3& v) { return {Rational(v[0], 2), Rational(v[1], 2), Rational(v[2], 2)}; }

}  // namespace

TEST_CASE("csl_vectors") {
  auto c = csl_vectors(Quat(0, 1, 1, 1));
  CHECK(c[0] == IVec3{1, 1, 1});
  CHECK(c[1] == IVec3{0, 1, -1});
  CHECK(c[2] == IVec3{-1, 0, 1});
  CHECK(c[3] == IVec3{1, -1, 0});
  c = csl_vectors(Quat(1, 0, 0, 0));
  CHECK(c[0] == IVec3{0, 0, 0});
  CHECK(c[1] == IVec3{1, 0, 0});
  CHECK(c[2] == IVec3{0, 1, 0});
  CHECK(c[3] == IVec3{0, 0, 1});
  c = csl_vectors(Quat(2, 1, 1, 1));
  CHECK(sub(sub(sub(scale(c[0], 2), c[1]), c[2]), c[3]) == IVec3{0, 0, 0});
  CHECK(csl_vectors(Quat::make({3, 1, 1, 1}, 2))[0] == IVec3{1, 1, 1});
}

TEST_CASE("sigma") {
  CHECK(sigma(Quat(0, 6, 3, 1)).sigma == 23);
  CHECK(sigma(Quat(0, 6, 3, 1)).ell == 1);
  CHECK(sigma(Quat(1, 1, 1, 1)).sigma == 1);
  CHECK(sigma(Quat(1, 1, 1, 1)).ell == 2);
  CHECK(sigma(Quat(5, 3, 2, 1)).sigma == 39);
  CHECK(sigma(Quat(5, 3, 2, 1)).ell == 0);
}

TEST_CASE("closed-form bases, worked examples") {
  ExactLattice z;
  CHECK(index_in(csl_basis_primitive(Quat(0, 1, 1, 1)), z) == 3);
  CHECK(index_in(csl_basis_primitive(Quat(0, 6, 3, 1)), z) == 23);
  CHECK(csl_basis_primitive(Quat(1, 1, 1, 1)) == z);
  ExactLattice bi = cubic_lattice(LatticeKind::cI);
  CHECK(index_in(csl_basis_bcc(Quat(0, 1, 1, 1)), bi) == 3);
  CHECK(csl_basis_bcc(Quat(1, 1, 1, 1)) == bi);
  CHECK(index_in(csl_basis_bcc(Quat(0, 6, 3, 1)), bi) == 23);
  ExactLattice fc = cubic_lattice(LatticeKind::cF);
  CHECK(index_in(csl_basis_fcc(Quat(0, 1, 1, 1)), fc) == 3);
  CHECK(index_in(csl_basis_fcc(Quat(2, 1, 1, 1)), fc) == 7);
  CHECK(index_in(csl_basis_fcc(Quat(1, 2, 2, 0)), fc) == 9);
  CHECK(csl(LatticeKind::cP, Quat(0, 1, 1, 1)) == csl_basis_primitive(Quat(0, 1, 1, 1)));
  CHECK(csl(LatticeKind::cI, Quat(0, 1, 1, 1)) == csl_basis_bcc(Quat(0, 1, 1, 1)));
  CHECK(csl(LatticeKind::cF, Quat(0, 1, 1, 1)) == csl_basis_fcc(Quat(0, 1, 1, 1)));
}

TEST_CASE("closed-form bases agree with the intersection oracle (Σ <= 25)") {
  auto rs = small_rotations(25);
  CHECK(rs.size() > 500);
  for (const auto& r : rs)
    for (LatticeKind k : kAllKinds) {
      INFO(r.str(), " ", to_string(k));
      ExactLattice closed = csl(k, r);
      REQUIRE(closed == csl_oracle(k, r));
      CHECK(index_in(closed, cubic_lattice(k)) == sigma(r).sigma);
    }
}

TEST_CASE("odd |r|^2: extra generators never change the cP lattice") {
  for (const auto& r : small_rotations(25)) {
    if (norm_sq(r).to_integer() % 2 == 0) continue;
    auto c = csl_vectors(r);
    ExactLattice four = ExactLattice::from_integer_generators({c[0], c[1], c[2], c[3]});
    CHECK(four == csl_basis_primitive(r));
    std::vector<RVec3> more{to_rational(c[0]), to_rational(c[1]), to_rational(c[2]), to_rational(c[3])};
    CHECK(ExactLattice::from_generators(more) == four);
  }
}

TEST_CASE("membership_coeff_check") {
  CHECK(membership_coeff_check(Quat(0, 1, 1, 1), Quat(1, 0, 0, 0)));
  CHECK(membership_coeff_check(Quat(0, 6, 3, 1), Quat::make({1, 1, 1, 1}, 2)));
  // ½(1,1,1,-1) gives ½(-1,3,1), which is not in Z^3.
  CHECK_FALSE(membership_coeff_check(Quat(0, 1, 1, 1), Quat::make({1, 1, 1, -1}, 2)));
  CHECK_THROWS_AS(Quat::make({1, 0, 0, 0}, 2), Error);
  // Exhaustive agreement with contains() over a box of half-integral coefficients.
  for (const Quat& r : {Quat(0, 1, 1, 1), Quat(2, 1, 1, 1), Quat(0, 6, 3, 1), Quat(1, 2, 2, 0), Quat(3, 1, 1, 1),
                        Quat(1, 1, 1, 1), Quat(5, 3, 2, 1), Quat(0, 5, 4, 2), Quat(3, 2, 0, 0)}) {
    auto c = csl_vectors(r);
    ExactLattice l = csl_basis_primitive(r);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int d = -2; d <= 2; ++d)
          for (int e = -2; e <= 2; ++e) {
            RQuat m{Rational(a, 2), Rational(b, 2), Rational(d, 2), Rational(e, 2)};
            IVec3 twice = add(add(scale(c[0], a), scale(c[1], b)), add(scale(c[2], d), scale(c[3], e)));
            INFO(r.str(), " ", to_string(m));
            CHECK(membership_coeff_check(r, m) == contains(l, half(twice)));
          }
  }
}
