#include "cslkit/verify.hpp"

#include "cslkit/bravais.hpp"
#include "cslkit/csl.hpp"
#include "cslkit/equivalence.hpp"
#include "cslkit/symmetry.hpp"

namespace cslkit {

namespace {

void expect(SuiteResult& res, bool ok, const std::string& witness) {
  ++res.checks;
  if (!ok && res.failures.size() < 50) res.failures.push_back(witness);
}

SuiteResult suite_csl(std::int64_t max_sigma) {
  SuiteResult res{"csl", "closed-form CSL bases equal L ∩ RL for every rotation, with index Σ", 0, {}};
  for (std::int64_t s = 1; s <= max_sigma; s += 2)
    for (const auto& r : enumerate_rotations(s))
      for (LatticeKind k : kAllKinds) {
        const ExactLattice closed = csl(k, r);
        const std::string w = std::string(to_string(k)) + " " + r.str();
        expect(res, closed == csl_oracle(k, r), w + ": closed form differs from intersection");
        expect(res, index_in(closed, cubic_lattice(k)) == s, w + ": index differs from Σ");
      }
  return res;
}

SuiteResult suite_counts(std::int64_t max_sigma) {
  SuiteResult res{"counts", "|rotations| = 24 f(Σ) and |classes| = n1+...+n5 from the counting formulas", 0, {}};
  for (std::int64_t s = 1; s <= max_sigma; s += 2) {
    const auto c = counts(s);
    const std::string w = "Σ=" + std::to_string(s);
    expect(res, static_cast<std::int64_t>(enumerate_rotations(s).size()) == 24 * c.f, w + ": rotation count");
    expect(res, static_cast<std::int64_t>(enumerate_classes(s).size()) == c.f_ineq, w + ": class count");
    expect(res, c.f == f_formula(s), w + ": f");
  }
  return res;
}

SuiteResult suite_symmetry(std::int64_t max_sigma) {
  SuiteResult res{"symmetry",
                  "symmetry groups of twofold classes match the point group of the CSL; |H| matches the class form; "
                  "generators Q satisfy Σ(Q) | Σ(R) and Σ(QR) | Σ(R)",
                  0,
                  {}};
  for (std::int64_t s = 1; s <= max_sigma; s += 2)
    for (const auto& c : enumerate_classes(s)) {
      const Quat& r = c.canonical;
      const int expected_h = [&] {
        switch (c.form.tag) {
          case FormTag::Unit: return 24;
          case FormTag::Sixfold: return 6;
          case FormTag::AxisMNNN: return 3;
          case FormTag::AxisMN00: return 4;
          case FormTag::AxisMNN0: return 2;
          default: return 1;
        }
      }();
      expect(res, intersection_group(r).order == expected_h, r.str() + ": |H(R)|");
      if (c.form.tag == FormTag::General) continue;
      const auto g = symmetry_group(r);
      for (LatticeKind k : kAllKinds)
        expect(res, static_cast<int>(proper_part(point_group(csl(k, r))).size()) == g.order,
               std::string(to_string(k)) + " " + r.str() + ": point group order differs from " + to_string(g.system));
      for (const auto& q : g.generators) {
        const auto sq = sigma(q).sigma, sqr = sigma(mul(q, r)).sigma;
        expect(res, s % sq == 0 && s % sqr == 0, r.str() + ": generator " + q.str() + " breaks Σ divisibility");
      }
    }
  return res;
}

SuiteResult suite_hex(std::int64_t max_sigma) {
  SuiteResult res{"hex", "for (m,n,n,n) classes: hexagonal ⇔ 3 | Σ, by formula and by the cP point group", 0, {}};
  for (std::int64_t s = 3; s <= max_sigma; s += 2)
    for (const auto& c : enumerate_classes(s)) {
      if (c.form.tag != FormTag::AxisMNNN && c.form.tag != FormTag::Sixfold) continue;
      const bool three = s % 3 == 0;
      const Quat& r = c.form.form;
      expect(res, (symmetry_group(r).system == CrystalSystem::Hexagonal) == three, r.str() + ": formula");
      expect(res, axis_symmetry_test(c.form.tag == FormTag::Sixfold ? Quat(3, 1, 1, 1) : r) == three,
             r.str() + ": axis test");
      const auto po = proper_part(point_group(csl(LatticeKind::cP, r))).size();
      expect(res, (po == 12) == three, r.str() + ": point group order " + std::to_string(po));
    }
  return res;
}

SuiteResult suite_primepower(std::int64_t max_sigma) {
  SuiteResult res{"primepower", "prime-power Σ: no vectorial class admits an orthogonal decomposition", 0, {}};
  for (std::int64_t s = 3; s <= max_sigma; s += 2) {
    if (factorize(s).size() != 1) continue;
    for (const auto& c : enumerate_classes(s)) {
      if (c.form.tag != FormTag::VectorialGeneral) continue;
      expect(res, all_orthogonal_decompositions(c.form.form).empty(), c.form.form.str() + ": has a decomposition");
    }
  }
  return res;
}

SuiteResult suite_bravais(std::int64_t max_sigma) {
  SuiteResult res{"bravais", "closed-form Bravais classes equal the lattice oracle and a matching conventional cell exists",
                  0, {}};
  for (std::int64_t s = 3; s <= max_sigma; s += 2)
    for (const auto& c : enumerate_classes(s)) {
      if (c.form.tag == FormTag::General) continue;
      for (LatticeKind k : kAllKinds) {
        const auto b = bravais(k, c.canonical);
        const std::string w = std::string(to_string(k)) + " " + c.canonical.str();
        expect(res, b.symbol == oracle_bravais(csl(k, c.canonical)).symbol, w + ": symbol " + b.symbol);
        expect(res, conventional_cell_check(k, c.canonical, b), w + ": no conventional cell for " + b.symbol);
      }
    }
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"csl", "counts", "symmetry", "hex", "primepower", "bravais"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::int64_t max_sigma) {
  if (name == "csl") return suite_csl(max_sigma);
  if (name == "counts") return suite_counts(max_sigma);
  if (name == "symmetry") return suite_symmetry(max_sigma);
  if (name == "hex") return suite_hex(max_sigma);
  if (name == "primepower") return suite_primepower(max_sigma);
  if (name == "bravais") return suite_bravais(max_sigma);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace cslkit
