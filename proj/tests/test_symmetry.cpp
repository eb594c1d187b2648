#include <algorithm>

#include "cslkit/csl.hpp"
#include "cslkit/equivalence.hpp"
#include "cslkit/symmetry.hpp"
#include "doctest.h"

using namespace cslkit;

TEST_CASE("group_closure") {
  CHECK(group_closure({}).size() == 1);
  CHECK(group_closure({Quat(1, 1, 0, 0), Quat(1, 1, 1, 1)}) == CubicGroup::elements());
  CHECK(group_closure({Quat(3, 1, 1, 1), Quat(0, 1, -1, 0)}).size() == 12);
  CHECK(group_closure({Quat(0, 6, 3, 1)}).size() == 2);
}

TEST_CASE("minimal_symmetry_group") {
  auto g = minimal_symmetry_group(Quat(3, 1, 1, 1));
  CHECK(g.system == CrystalSystem::Hexagonal);
  CHECK(g.generators == std::vector<Quat>{Quat(3, 1, 1, 1), Quat(0, 1, -1, 0)});
  CHECK(g.order == 12);
  g = minimal_symmetry_group(Quat(2, 1, 0, 0));
  CHECK(g.system == CrystalSystem::Tetragonal);
  CHECK(g.generators == std::vector<Quat>{Quat(1, 1, 0, 0), Quat(0, 0, 2, 1)});
  CHECK(g.order == 8);
  g = minimal_symmetry_group(Quat(5, 3, 2, 1));
  CHECK(g.system == CrystalSystem::Trivial);
  CHECK(g.order == 1);
  // (4,2,1,0) permutes to (0,4,2,1): a twofold class, hence monoclinic.
  CHECK(equivalent(Quat(4, 2, 1, 0), Quat(0, 4, 2, 1)));
  CHECK(minimal_symmetry_group(Quat(4, 2, 1, 0)).system == CrystalSystem::Monoclinic);
  CHECK(minimal_symmetry_group(Quat(1, 2, 2, 2)).system == CrystalSystem::Rhombohedral);
  CHECK(minimal_symmetry_group(Quat(3, 2, 2, 2)).order == 6);
  CHECK(minimal_symmetry_group(Quat(1, 2, 2, 0)).system == CrystalSystem::Orthorhombic);
}

TEST_CASE("is_symmetry_operation") {
  CHECK(is_symmetry_operation(Quat(0, 1, 1, 1), Quat(3, 2, 2, 2)));
  CHECK_FALSE(is_symmetry_operation(Quat(0, 1, 1, 1), Quat(2, 1, 1, 1)));
  for (const Quat& r : {Quat(0, 6, 3, 1), Quat(0, 1, 1, 1), Quat(0, 4, 3, 2), Quat(0, 5, 4, 2)})
    for (LatticeKind k : kAllKinds) CHECK(is_symmetry_operation(r, r, k));
  CHECK(is_symmetry_operation(Quat(1, 0, 0, 0), Quat(5, 3, 2, 1)));
}

TEST_CASE("axis_symmetry_test") {
  CHECK(axis_symmetry_test(Quat(3, 2, 2, 2)));
  CHECK_FALSE(axis_symmetry_test(Quat(5, 2, 2, 2)));
  CHECK(axis_symmetry_test(Quat(2, 1, 0, 0)));
  CHECK(axis_symmetry_test(Quat(0, 6, 3, 1)));
  CHECK_THROWS_AS(axis_symmetry_test(Quat(1, 0, 0, 0)), Error);
  // Agrees with the lattice criterion for the axis rotation.
  for (std::int64_t s = 3; s <= 45; s += 2)
    for (const auto& r : enumerate_rotations(s)) {
      if (r.vector_num() == IVec3{0, 0, 0}) continue;
      IVec3 a = primitive_direction(r.vector_num());
      INFO(r.str());
      CHECK(axis_symmetry_test(r) == is_symmetry_operation(Quat(0, a[0], a[1], a[2]), r));
    }
}

TEST_CASE("decompose_orthogonal") {
  auto d = decompose_orthogonal(Quat(0, 5, 4, 2));
  REQUIRE(d.has_value());
  CHECK(norm_sq(d->q).to_integer() % 2 == 1);
  CHECK(norm_sq(d->m).to_integer() % 2 == 1);
  CHECK_FALSE(decompose_orthogonal(Quat(0, 4, 3, 2)).has_value());
  CHECK(count_orthogonal_decompositions(Quat(0, 1, 1, 1)) > 1);
  CHECK(count_orthogonal_decompositions(Quat(0, 1, 0, 0)) > 1);
  CHECK_THROWS_AS(decompose_orthogonal(Quat(1, 1, 0, 0)), Error);
  for (std::int64_t s = 3; s <= 99; s += 2)
    for (const auto& c : enumerate_classes(s)) {
      if (c.form.tag != FormTag::VectorialGeneral) continue;
      const Quat& r = c.form.form;
      for (const auto& x : all_orthogonal_decompositions(r)) {
        const Quat qm = mul(x.q, x.m);
        CHECK(qm == Quat(0, (1 << x.ell) * r.num(1), (1 << x.ell) * r.num(2), (1 << x.ell) * r.num(3)));
        CHECK(mul(x.m, x.q) == negate(qm));
        CHECK(checked::gcd(sigma(x.q).sigma, sigma(x.m).sigma) == 1);
      }
      if (factorize(s).size() == 1) CHECK_FALSE(decompose_orthogonal(r).has_value());
    }
}

TEST_CASE("symmetry_group") {
  auto g = symmetry_group(Quat(1, 2, 2, 2));
  CHECK(g.system == CrystalSystem::Rhombohedral);
  CHECK(g.generators == std::vector<Quat>{Quat(1, 1, 1, 1), Quat(0, 3, 1, -4)});
  g = symmetry_group(Quat(3, 2, 0, 0));
  CHECK(g.system == CrystalSystem::Tetragonal);
  CHECK(g.generators == std::vector<Quat>{Quat(1, 1, 0, 0), Quat(0, 0, 3, 2)});
  g = symmetry_group(Quat(0, 6, 3, 1));
  CHECK(g.system == CrystalSystem::Monoclinic);
  CHECK(g.generators == std::vector<Quat>{Quat(0, 6, 3, 1)});
  g = symmetry_group(Quat(0, 1, 1, 1));
  CHECK(g.system == CrystalSystem::Hexagonal);
  CHECK(g.standard_generators == std::vector<Quat>{Quat(3, 1, 1, 1), Quat(0, 1, -1, 0)});
  CHECK(symmetry_group(Quat(3, 2, 2, 2)).system == CrystalSystem::Hexagonal);
  CHECK(symmetry_group(Quat(0, 5, 4, 2)).system == CrystalSystem::Orthorhombic);
  CHECK(symmetry_group(Quat(0, 4, 3, 2)).system == CrystalSystem::Monoclinic);
  CHECK(symmetry_group(Quat(1, 0, 0, 0)).system == CrystalSystem::Cubic);
  CHECK_THROWS_WITH_AS(symmetry_group(Quat(5, 3, 2, 1)), doctest::Contains("general case not covered"), Error);
}

TEST_CASE("coprime_factor_check") {
  CHECK(coprime_factor_check(Quat(0, 1, 1, 1), Quat(0, 1, -1, 0)));
  // conj(q) r = (4,0,2,-3): integral, Σ = 29 coprime to Σ(q) = 1.
  CHECK(coprime_factor_check(Quat(0, 4, 3, 2), Quat(0, 1, 0, 0)));
  for (const Quat& q : {Quat(0, 1, 1, 1), Quat(0, 6, 3, 1), Quat(0, 5, 4, 2)}) CHECK(coprime_factor_check(q, q));
  CHECK_FALSE(coprime_factor_check(Quat(0, 6, 3, 1), Quat(0, 1, 1, 1)));
}

TEST_CASE("symmetry groups agree with the lattice oracle (Σ <= 59)") {
  for (std::int64_t s = 1; s <= 59; s += 2)
    for (const auto& c : enumerate_classes(s)) {
      const Quat& r = c.canonical;
      INFO(r.str());
      auto mg = minimal_symmetry_group(r);
      CHECK(mg.elements == minimal_symmetry_elements(r));
      if (c.form.tag == FormTag::General) {
        CHECK(mg.order == 1);
        CHECK_THROWS_AS(symmetry_group(r), Error);
        continue;
      }
      auto g = symmetry_group(r);
      CHECK(g.order == proper_order(g.system));
      CHECK((g.order == mg.order || g.order == 2 * mg.order));
      CHECK(std::includes(g.elements.begin(), g.elements.end(), mg.elements.begin(), mg.elements.end()));
      for (LatticeKind k : kAllKinds) {
        CHECK(static_cast<int>(proper_part(point_group(csl(k, r))).size()) == g.order);
        for (const auto& q : g.elements) CHECK(is_symmetry_operation(q, r, k));
      }
      if (c.form.tag == FormTag::AxisMNNN)
        CHECK((g.system == CrystalSystem::Hexagonal) == (s % 3 == 0));
      if (c.form.tag == FormTag::AxisMNNN) CHECK(axis_symmetry_test(c.form.form) == (s % 3 == 0));
    }
}
