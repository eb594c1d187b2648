#include <random>
#include <vector>

#include "cslkit/quat.hpp"
#include "doctest.h"

using namespace cslkit;

namespace {

// Left-multiplication matrix of a quaternion acting on R^4; used as an independent product.
std::array<std::array<std::int64_t, 4>, 4> left_matrix(const Quat::Num& a) {
  return {{{a[0], -a[1], -a[2], -a[3]},
           {a[1], a[0], -a[3], a[2]},
           {a[2], a[3], a[0], -a[1]},
           {a[3], -a[2], a[1], a[0]}}};
}

Quat::Num oracle_mul(const Quat::Num& a, const Quat::Num& b) {
  auto m = left_matrix(a);
  Quat::Num r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * b[j];
  return r;
}

std::vector<Quat> cubic48() {
  std::vector<Quat> out;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      Quat::Num n{};
      n[i] = s;
      out.emplace_back(n);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          Quat::Num n{};
          n[i] = s;
          n[j] = t;
          out.emplace_back(n);
        }
  for (int mask = 0; mask < 16; ++mask) {
    Quat::Num n{};
    for (int i = 0; i < 4; ++i) n[i] = (mask >> i & 1) ? -1 : 1;
    out.push_back(Quat::make(n, 2));
  }
  return out;
}

}  // namespace

TEST_CASE("mul") {
  CHECK(mul(Quat(0, 1, 0, 0), Quat(0, 0, 1, 0)) == Quat(0, 0, 0, 1));
  Quat q(3, -2, 5, 7);
  CHECK(mul(Quat(1, 0, 0, 0), q) == q);
  Quat h = Quat::make({1, 1, 1, 1}, 2);
  auto sq = oracle_mul(h.num(), h.num());  // numerators over 4
  CHECK(sq == Quat::Num{-2, 2, 2, 2});
  CHECK(mul(h, h) == Quat::make({-1, 1, 1, 1}, 2));
}

TEST_CASE("conj and norm") {
  CHECK(conj(Quat(0, 1, 1, 1)) == Quat(0, -1, -1, -1));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 100; ++t) {
    Quat q(d(rng), d(rng), d(rng), d(rng));
    CHECK(conj(conj(q)) == q);
    Rational n = norm_sq(q);
    CHECK(mul(q, conj(q)) == Quat(n.to_integer(), 0, 0, 0));
  }
  CHECK(norm_sq(Quat(2, 1, 0, 0)) == Rational(5));
  CHECK(norm_sq(Quat(1, 1, 1, 1)) == Rational(4));
  CHECK(norm_sq(Quat::make({3, 1, 1, 1}, 2)) == Rational(3));
}

TEST_CASE("construction invariants") {
  CHECK(Quat::make({2, 4, 6, 8}, 2) == Quat(1, 2, 3, 4));
  CHECK_THROWS_AS(Quat::make({1, 2, 1, 1}, 2), Error);
  CHECK_THROWS_AS(Quat::make({1, 1, 1, 1}, 3), Error);
}

TEST_CASE("primitive_reduce") {
  CHECK(primitive_reduce(Quat(2, 2, 2, 2)) == Quat(1, 1, 1, 1));
  CHECK(primitive_reduce(Quat::make({3, 1, 1, 1}, 2)) == Quat::make({3, 1, 1, 1}, 2));
  CHECK(primitive_reduce(Quat(0, -2, -4, -6)) == Quat(0, 1, 2, 3));
  CHECK_THROWS_WITH_AS(primitive_reduce(Quat()), "zero quaternion has no primitive form", Error);
  CHECK(primitive_integral(Quat::make({-3, -3, 3, 3}, 2)) == Quat(1, 1, -1, -1));
}

TEST_CASE("cayley") {
  CHECK(cayley(Quat(1, 0, 0, 0)) == identity3());
  ExactMat3 two{};
  two[0][0] = 1;
  two[1][1] = -1;
  two[2][2] = -1;
  CHECK(cayley(Quat(0, 1, 0, 0)) == two);
  // x -> y -> z -> x
  ExactMat3 cyc{};
  cyc[1][0] = 1;
  cyc[2][1] = 1;
  cyc[0][2] = 1;
  CHECK(cayley(Quat(1, 1, 1, 1)) == cyc);
  CHECK(cayley(Quat(3, 1, 2, 5)) == cayley(Quat(-6, -2, -4, -10)));
  CHECK(cayley(Quat::make({1, 1, 1, 1}, 2)) == cyc);
}

TEST_CASE("axis_angle") {
  auto a = axis_angle(Quat(3, 1, 1, 1));
  CHECK(a.axis == IVec3{1, 1, 1});
  CHECK(a.cos_phi == Rational(1, 2));
  a = axis_angle(Quat(0, 1, 1, 1));
  CHECK(a.axis == IVec3{1, 1, 1});
  CHECK(a.cos_phi == Rational(-1));
  a = axis_angle(Quat(2, 1, 0, 0));
  CHECK(a.axis == IVec3{1, 0, 0});
  CHECK(a.cos_phi == Rational(3, 5));
  CHECK_THROWS_AS(axis_angle(Quat(1, 0, 0, 0)), Error);
}

TEST_CASE("crystallographic_name") {
  CHECK(crystallographic_name(Quat(1, 1, 0, 0)) == "4⁺ x,0,0");
  CHECK(crystallographic_name(Quat(0, 1, -1, 0)) == "2 x,x̄,0");
  CHECK(crystallographic_name(Quat(2, 1, 1, 1)) == "φ = arccos(1/7), [111]");
  CHECK(crystallographic_name(Quat(1, 0, 0, 0)) == "1");
  CHECK(crystallographic_name(Quat(0, 1, 0, 0)) == "2 x,0,0");
  CHECK(crystallographic_name(Quat(0, 0, 1, 0)) == "2 0,y,0");
  CHECK(crystallographic_name(Quat(0, 1, 1, 0)) == "2 x,x,0");
  CHECK(crystallographic_name(Quat(0, 0, 1, 1)) == "2 0,y,y");
  CHECK(crystallographic_name(Quat(0, 1, 1, 1)) == "2 x,x,x");
  CHECK(crystallographic_name(Quat(1, 1, 1, 1)) == "3⁺ x,x,x");
  CHECK(crystallographic_name(Quat(1, -1, -1, -1)) == "3⁻ x,x,x");
  CHECK(crystallographic_name(Quat(1, -1, 0, 0)) == "4⁻ x,0,0");
  CHECK(crystallographic_name(Quat(3, 1, 1, 1)) == "φ = arccos(1/2), [111]");
}

TEST_CASE("text round trip") {
  for (const char* s : {"(0,1,1,1)", "1/2(3,1,-1,1)", "(-5,3,2,1)"}) CHECK(Quat::parse(s).str() == s);
  CHECK(Quat::parse(" 0, 6 ,3,1 ") == Quat(0, 6, 3, 1));
  CHECK(Quat::parse("1/2 (2,4,6,8)") == Quat(1, 2, 3, 4));
  CHECK_THROWS_AS(Quat::parse("(1,2,3)"), Error);
  CHECK_THROWS_AS(Quat::parse("(1,2,3,4"), Error);
  CHECK_THROWS_AS(Quat::parse("1/2(1,2,3,4)"), Error);
}

TEST_CASE("homomorphism on 48 x 48 products") {
  auto g = cubic48();
  REQUIRE(g.size() == 48);
  for (const auto& a : g) {
    ExactMat3 ra = cayley(a);
    CHECK(is_orthogonal(ra));
    CHECK(det(ra) == Rational(1));
    for (const auto& b : g) {
      Quat ab = mul(a, b);
      CHECK(cayley(ab) == mul(ra, cayley(b)));
      CHECK(norm_sq(ab) == norm_sq(a) * norm_sq(b));
      CHECK(conj(ab) == mul(conj(b), conj(a)));
    }
  }
}

TEST_CASE("homomorphism on random quaternions") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> d(-12, 12);
  int checked_pairs = 0;
  while (checked_pairs < 10000) {
    Quat a(d(rng), d(rng), d(rng), d(rng));
    Quat b(d(rng), d(rng), d(rng), d(rng));
    if (a.is_zero() || b.is_zero()) continue;
    Quat ab = mul(a, b);
    Quat::Num o = oracle_mul(a.num(), b.num());
    REQUIRE(ab.num() == o);
    ExactMat3 r = cayley(ab);
    REQUIRE(r == mul(cayley(a), cayley(b)));
    REQUIRE(is_orthogonal(r));
    REQUIRE(det(r) == Rational(1));
    REQUIRE(cayley(a) == cayley(negate(a)));
    REQUIRE(norm_sq(ab) == norm_sq(a) * norm_sq(b));
    REQUIRE(conj(ab) == mul(conj(b), conj(a)));
    ++checked_pairs;
  }
  CHECK(checked_pairs == 10000);
}
