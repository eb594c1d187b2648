#include <algorithm>
#include <set>

#include "cslkit/csl.hpp"
#include "cslkit/equivalence.hpp"
#include "doctest.h"

using namespace cslkit;

namespace {

// Brute force: all primitive sign-canonical quaternions in a box, filtered by Σ.
std::size_t brute_rotation_count(std::int64_t s) {
  std::size_t n = 0;
  const std::int64_t b = checked::isqrt(4 * s);
  for (std::int64_t a = 0; a <= b; ++a)
    for (std::int64_t c = -b; c <= b; ++c)
      for (std::int64_t d = -b; d <= b; ++d)
        for (std::int64_t e = -b; e <= b; ++e) {
          Quat q(a, c, d, e);
          if (q.is_zero() || !q.is_primitive() || sign_canonical(q) != q) continue;
          if (sigma(q).sigma == s) ++n;
        }
  return n;
}

}  // namespace

TEST_CASE("cubic group") {
  CHECK(CubicGroup::elements48().size() == 48);
  const auto& g = CubicGroup::elements();
  CHECK(g.size() == 24);
  for (const auto& a : g)
    for (const auto& b : g) CHECK(CubicGroup::contains(mul(a, b)));
  CHECK(CubicGroup::contains(Quat::make({1, -1, 1, 1}, 2)));
  CHECK_FALSE(CubicGroup::contains(Quat(0, 1, 1, 1)));
}

TEST_CASE("intersection_group") {
  auto h = intersection_group(Quat(3, 1, 1, 1));
  CHECK(h.order == 6);
  CHECK(h.label == "trigonal 32");
  h = intersection_group(Quat(2, 1, 0, 0));
  CHECK(h.order == 4);
  CHECK(h.label == "tetragonal 4");
  CHECK(intersection_group(Quat(0, 6, 3, 1)).order == 1);
  CHECK(intersection_group(Quat(1, 2, 2, 2)).order == 3);
  CHECK(intersection_group(Quat(1, 2, 2, 0)).order == 2);
  CHECK(intersection_group(Quat(1, 1, 0, 0)).order == 24);
}

TEST_CASE("equivalent") {
  CHECK(equivalent(Quat(3, 1, 1, 1), Quat(0, 1, 1, 1)));
  CHECK_FALSE(equivalent(Quat(0, 5, 4, 2), Quat(0, 8, 5, 1)));
  CHECK(equivalent(Quat(0, 6, 3, 1), Quat(0, 6, 3, 1)));
  CHECK_FALSE(equivalent(Quat(5, 3, 2, 1), Quat(-5, 3, 2, 1)));
  CHECK(equivalent(Quat(5, 3, 2, 1), Quat(-5, 3, 2, 1), true));
  CHECK(equivalent(Quat(2, 1, 1, 1), Quat(2, -1, -1, -1)));
}

TEST_CASE("canonical_rep") {
  CHECK(canonical_rep(Quat(0, 1, 1, 1)) == canonical_rep(Quat(3, 1, 1, 1)));
  for (const Quat& r : {Quat(0, 6, 3, 1), Quat(5, 3, 2, 1), Quat(1, 2, 2, 0)})
    CHECK(canonical_rep(canonical_rep(r)) == canonical_rep(r));
  auto rots = enumerate_rotations(3);
  std::set<Quat> reps;
  for (const auto& r : rots) reps.insert(canonical_rep(r));
  CHECK(rots.size() == 96);
  CHECK(reps.size() == 1);
  CHECK(double_coset(Quat(3, 1, 1, 1)).size() == 96);
}

TEST_CASE("classify_form") {
  auto f = classify_form(Quat(1, 2, 2, 2));
  CHECK(f.tag == FormTag::AxisMNNN);
  CHECK(f.m == 1);
  CHECK(f.n == 2);
  f = classify_form(Quat(3, 2, 0, 0));
  CHECK(f.tag == FormTag::AxisMN00);
  CHECK(f.m == 3);
  CHECK(f.n == 2);
  f = classify_form(Quat(0, 5, 2, 1));
  CHECK(f.tag == FormTag::VectorialGeneral);
  CHECK(f.form == Quat(0, 5, 2, 1));
  CHECK(classify_form(Quat(3, 1, 1, 1)).tag == FormTag::Sixfold);
  CHECK(classify_form(Quat(1, 1, 1, 1)).tag == FormTag::Unit);
  CHECK(classify_form(Quat(5, 3, 2, 1)).tag == FormTag::General);
  CHECK(classify_form(Quat(5, 3, 2, 1)).form == Quat(5, 3, 2, 1));
  CHECK(classify_form(Quat(-5, 3, 2, 1)).form == Quat(-5, 3, 2, 1));
  CHECK(classify_form(Quat(0, 9, 2, 1)).form == Quat(0, 9, 2, 1));
  // (0,7,6,1) has |r|² = 86, Σ = 43: the threefold class of (4,3,3,3), not a vectorial one.
  CHECK(equivalent(Quat(0, 7, 6, 1), Quat(4, 3, 3, 3)));
  CHECK(classify_form(Quat(0, 7, 6, 1)).form == Quat(4, 3, 3, 3));
  // Witness conjugators reproduce the form.
  for (const Quat& r : {Quat(0, 6, 3, 1), Quat(2, 0, 1, 0), Quat(7, 1, -1, 1), Quat(1, 0, 2, 2)}) {
    auto fc = classify_form(r);
    CHECK(same_rotation(mul(mul(fc.left, r), fc.right), fc.form));
  }
}

TEST_CASE("counts") {
  auto c = counts(13);
  CHECK(c.n1 == 0);
  CHECK(c.n2 == 1);
  CHECK(c.n3 == 1);
  CHECK(c.n4 == 0);
  CHECK(c.n5 == 0);
  CHECK(c.f == 14);
  CHECK(c.f_ineq == 2);
  c = counts(3);
  CHECK(c.n1 == 1);
  CHECK(c.n2 + c.n3 + c.n4 + c.n5 == 0);
  CHECK(c.f == 4);
  CHECK(c.f_ineq == 1);
  c = counts(45);
  CHECK(c.n5 == 3);
  CHECK(c.f == 72);
  CHECK(c.f_ineq == 3);
  CHECK(counts(5).f == 6);
  CHECK(counts(1).f_ineq == 1);
  CHECK_THROWS_WITH_AS(counts(4), doctest::Contains("f(Σ) = 0 if Σ is even"), Error);
  for (std::int64_t s = 1; s < 200; s += 2) {
    auto r = counts(s);
    CHECK(r.f == r.n0 + 4 * r.n1 + 6 * r.n2 + 8 * r.n3 + 12 * r.n4 + 24 * r.n5);
  }
}

TEST_CASE("enumerate_rotations") {
  CHECK(enumerate_rotations(1) == CubicGroup::elements());
  CHECK(enumerate_rotations(3).size() == 96);
  CHECK(enumerate_rotations(5).size() == 144);
  for (std::int64_t s : {7, 9, 15, 21})
    CHECK(enumerate_rotations(s).size() == brute_rotation_count(s));
}

TEST_CASE("enumerate_classes") {
  auto c39 = enumerate_classes(39);
  CHECK(c39.size() == 3);
  int general = 0;
  for (const auto& c : c39) {
    if (c.form.tag == FormTag::AxisMNNN) CHECK(c.form.form == Quat(6, 1, 1, 1));
    if (c.form.tag == FormTag::General) {
      ++general;
      CHECK(c.paired);
    }
  }
  CHECK(general == 2);
  CHECK(enumerate_classes(39, true).size() == 2);
  auto c15 = enumerate_classes(15);
  REQUIRE(c15.size() == 1);
  CHECK(equivalent(c15[0].canonical, Quat(0, 5, 2, 1)));
  auto c21 = enumerate_classes(21);
  REQUIRE(c21.size() == 2);
  std::set<Quat> forms{c21[0].form.form, c21[1].form.form};
  CHECK(forms == std::set<Quat>{Quat(3, 2, 2, 2), Quat(0, 4, 2, 1)});
}

TEST_CASE("class invariants") {
  for (std::int64_t s = 1; s <= 45; s += 2) {
    auto classes = enumerate_classes(s);
    std::int64_t total = 0;
    for (const auto& c : classes) {
      total += c.size;
      CHECK((c.h_order == 1 || c.h_order == 2 || c.h_order == 3 || c.h_order == 4 || c.h_order == 6 ||
             c.h_order == 24));
      // Class functions are constant on a sample of the class.
      auto coset = double_coset(c.canonical);
      for (std::size_t i = 0; i < coset.size(); i += 37) {
        CHECK(classify_form(coset[i]).tag == c.form.tag);
        CHECK(classify_form(coset[i]).form == c.form.form);
        CHECK(intersection_group(coset[i]).order == c.h_order);
        CHECK(sigma(coset[i]).sigma == s);
      }
    }
    CHECK(total == 24 * f_formula(s));
    CHECK(static_cast<std::int64_t>(classes.size()) == counts(s).f_ineq);
  }
}
