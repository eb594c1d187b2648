#include "cslkit/equivalence.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "cslkit/csl.hpp"

namespace cslkit {

namespace ck = checked;

namespace {

std::vector<Quat> build48() {
  std::vector<Quat> out;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      Quat::Num n{};
      n[static_cast<std::size_t>(i)] = s;
      out.emplace_back(n);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          Quat::Num n{};
          n[static_cast<std::size_t>(i)] = s;
          n[static_cast<std::size_t>(j)] = t;
          out.emplace_back(n);
        }
  for (int mask = 0; mask < 16; ++mask) {
    Quat::Num n{};
    for (int i = 0; i < 4; ++i) n[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
    out.emplace_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Quat> build24() {
  std::vector<Quat> out;
  for (const auto& q : build48())
    if (sign_canonical(q) == q) out.push_back(q);
  return out;
}

Quat key(const Quat& q) { return primitive_integral(q); }

}  // namespace

const std::vector<Quat>& CubicGroup::elements48() {
  static const std::vector<Quat> g = build48();
  return g;
}

const std::vector<Quat>& CubicGroup::elements() {
  static const std::vector<Quat> g = build24();
  return g;
}

bool CubicGroup::contains(const Quat& r) {
  const auto& g = elements();
  return std::binary_search(g.begin(), g.end(), key(r));
}

IntersectionGroup intersection_group(const Quat& r) {
  IntersectionGroup h;
  // Q in G with R^-1 Q R in G, i.e. G ∩ R G R^-1.
  const Quat rc = conj(r);
  bool has_fourfold = false, has_threefold = false;
  for (const auto& q : CubicGroup::elements()) {
    if (!CubicGroup::contains(mul(mul(rc, q), r))) continue;
    h.elements.push_back(q);
    std::int64_t n = norm_sq(q).to_integer();
    if (n == 2 && q.num(0) != 0) has_fourfold = true;
    if (n == 4) has_threefold = true;
  }
  h.order = static_cast<int>(h.elements.size());
  switch (h.order) {
    case 24: h.label = "cubic 432"; break;
    case 12: h.label = "tetrahedral 23"; break;
    case 8: h.label = "tetragonal 422"; break;
    case 6: h.label = "trigonal 32"; break;
    case 4: h.label = has_fourfold ? "tetragonal 4" : "orthorhombic 222"; break;
    case 3: h.label = "trigonal 3"; break;
    case 2: h.label = "monoclinic 2"; break;
    case 1: h.label = "trivial 1"; break;
    default: h.label = "order " + std::to_string(h.order); break;
  }
  (void)has_threefold;
  return h;
}

std::vector<Quat> double_coset(const Quat& r) {
  std::vector<Quat> out;
  out.reserve(576);
  for (const auto& q : CubicGroup::elements()) {
    Quat qr = mul(q, r);
    for (const auto& q2 : CubicGroup::elements()) out.push_back(key(mul(qr, q2)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool equivalent(const Quat& r, const Quat& s, bool grimmer) {
  const Quat target = key(s);
  auto hit = [&](const Quat& x) {
    for (const auto& q : CubicGroup::elements()) {
      Quat qx = mul(q, x);
      for (const auto& q2 : CubicGroup::elements())
        if (key(mul(qx, q2)) == target) return true;
    }
    return false;
  };
  return hit(r) || (grimmer && hit(conj(r)));
}

Quat canonical_rep(const Quat& r) { return double_coset(r).front(); }

const char* to_string(FormTag t) {
  switch (t) {
    case FormTag::Unit: return "unit";
    case FormTag::Sixfold: return "sixfold";
    case FormTag::AxisMNNN: return "(m,n,n,n)";
    case FormTag::AxisMN00: return "(m,n,0,0)";
    case FormTag::AxisMNN0: return "(m,n,n,0)";
    case FormTag::VectorialGeneral: return "vectorial";
    case FormTag::General: return "general";
  }
  return "?";
}

std::string FormClass::str() const {
  std::string s = to_string(tag);
  switch (tag) {
    case FormTag::AxisMNNN:
    case FormTag::AxisMN00:
    case FormTag::AxisMNN0:
      s += " m=" + std::to_string(m) + " n=" + std::to_string(n);
      break;
    case FormTag::VectorialGeneral:
      s += " (0," + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
      break;
    default: break;
  }
  return s;
}

namespace {

struct Candidate {
  Quat form;
  Quat left, right;
};

// Ranking for display forms; smaller is better.
struct Rank {
  std::int64_t norm;
  std::array<std::int64_t, 6> tie;
  auto operator<=>(const Rank&) const = default;
};

std::optional<Rank> rank_for(FormTag tag, const Quat& c) {
  const std::int64_t a = c.num(0), b = c.num(1), d = c.num(2), e = c.num(3);
  const std::int64_t norm = norm_sq(c).to_integer();
  switch (tag) {
    case FormTag::Unit:
      if (c == Quat(1, 0, 0, 0)) return Rank{norm, {}};
      return std::nullopt;
    case FormTag::Sixfold:
      if (c == Quat(0, 1, 1, 1)) return Rank{norm, {}};
      return std::nullopt;
    case FormTag::AxisMNNN:
      if (a > 0 && b > 0 && b == d && d == e) return Rank{norm, {a, b}};
      return std::nullopt;
    case FormTag::AxisMN00:
      if (a > b && b > 0 && d == 0 && e == 0) return Rank{norm, {a, b}};
      return std::nullopt;
    case FormTag::AxisMNN0:
      if (a > 0 && b > 0 && a != b && b == d && e == 0) return Rank{norm, {(a + 1) % 2, a, b}};
      return std::nullopt;
    case FormTag::VectorialGeneral:
      if (a == 0 && b >= d && d >= e && e >= 0) return Rank{norm, {-b, -d, -e}};
      return std::nullopt;
    case FormTag::General:
      if (a != 0 && b >= d && d >= e && e >= 0) return Rank{norm, {-ck::abs(a), a < 0 ? 1 : 0, -b, -d, -e}};
      return std::nullopt;
  }
  return std::nullopt;
}

FormTag tag_for(const Quat& r, int h_order) {
  switch (h_order) {
    case 24: return FormTag::Unit;
    case 6: return FormTag::Sixfold;
    case 3: return FormTag::AxisMNNN;
    case 4: return FormTag::AxisMN00;
    case 2: return FormTag::AxisMNN0;
    default: break;
  }
  for (const auto& q : CubicGroup::elements()) {
    Quat qr = mul(q, r);
    for (const auto& q2 : CubicGroup::elements())
      if (key(mul(qr, q2)).num(0) == 0) return FormTag::VectorialGeneral;
  }
  return FormTag::General;
}

}  // namespace

FormClass classify_form(const Quat& r_in) {
  const Quat r = key(r_in);
  FormClass fc;
  fc.tag = tag_for(r, intersection_group(r).order);
  std::optional<Rank> best;
  for (const auto& q : CubicGroup::elements()) {
    Quat qr = mul(q, r);
    for (const auto& q2 : CubicGroup::elements()) {
      Quat p = key(mul(qr, q2));
      for (const Quat& c : {p, negate(p)}) {
        auto rk = rank_for(fc.tag, c);
        if (rk && (!best || *rk < *best)) {
          best = rk;
          fc.form = c;
          fc.left = q;
          fc.right = q2;
        }
      }
    }
  }
  if (!best) throw Error("internal: no display form found for " + r.str());
  switch (fc.tag) {
    case FormTag::AxisMNNN:
    case FormTag::AxisMN00:
    case FormTag::AxisMNN0:
      fc.m = fc.form.num(0);
      fc.n = fc.form.num(1);
      break;
    case FormTag::VectorialGeneral:
      fc.l = fc.form.num(1);
      fc.m = fc.form.num(2);
      fc.n = fc.form.num(3);
      break;
    default: break;
  }
  return fc;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw Error("factorize needs a positive integer");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t f_formula(std::int64_t sigma) {
  if (sigma < 1) throw Error("Σ must be positive");
  if (sigma % 2 == 0) return 0;
  std::int64_t f = sigma;
  for (auto [p, e] : factorize(sigma)) f = f / p * (p + 1);
  return f;
}

CountReport counts(std::int64_t sigma) {
  if (sigma < 1) throw Error("Σ must be positive");
  if (sigma % 2 == 0) throw Error("f(Σ) = 0 if Σ is even: no coincidence rotation has even Σ");
  CountReport c;
  c.sigma = sigma;
  c.f = f_formula(sigma);
  if (sigma == 1) {
    c.n0 = 1;
    c.f_ineq = 1;
    return c;
  }
  auto fac = factorize(sigma);
  const auto m = static_cast<int>(fac.size());
  c.n1 = sigma == 3 ? 1 : 0;
  if (std::all_of(fac.begin(), fac.end(), [](auto pe) { return pe.first % 4 == 1; })) c.n2 = std::int64_t{1} << (m - 1);
  if (sigma > 3) {
    bool ok = true;
    int m6 = 0;
    for (auto [p, e] : fac) {
      if (p == 3) ok = ok && e == 1;
      else if (p % 6 == 1) ++m6;
      else ok = false;
    }
    if (ok && m6 > 0) c.n3 = std::int64_t{1} << (m6 - 1);
    if (std::all_of(fac.begin(), fac.end(), [](auto pe) { return pe.first % 8 == 1 || pe.first % 8 == 3; }))
      c.n4 = std::int64_t{1} << (m - 1);
  }
  std::int64_t rest = c.f - 4 * c.n1 - 6 * c.n2 - 8 * c.n3 - 12 * c.n4;
  if (rest < 0 || rest % 24 != 0) throw Error("internal: class counts inconsistent for Σ=" + std::to_string(sigma));
  c.n5 = rest / 24;
  c.f_ineq = c.n1 + c.n2 + c.n3 + c.n4 + c.n5;
  return c;
}

std::vector<Quat> enumerate_rotations(std::int64_t sigma) {
  if (sigma < 1 || sigma % 2 == 0) throw Error("Σ must be odd and positive");
  std::vector<Quat> out;
  for (std::int64_t norm : {sigma, 2 * sigma, 4 * sigma}) {
    const std::int64_t b = ck::isqrt(norm);
    for (std::int64_t a = 0; a <= b; ++a) {
      const std::int64_t ra = norm - a * a;
      const std::int64_t bb = ck::isqrt(ra);
      for (std::int64_t c = -bb; c <= bb; ++c) {
        const std::int64_t rc = ra - c * c;
        const std::int64_t bc = ck::isqrt(rc);
        for (std::int64_t d = -bc; d <= bc; ++d) {
          const std::int64_t rd = rc - d * d;
          if (!ck::is_square(rd)) continue;
          const std::int64_t e = ck::isqrt(rd);
          for (std::int64_t ee : {e, -e}) {
            Quat q(a, c, d, ee);
            if (q.is_primitive() && sign_canonical(q) == q) out.push_back(q);
            if (e == 0) break;
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ClassInfo> enumerate_classes(std::int64_t sigma, bool grimmer) {
  std::vector<Quat> all = enumerate_rotations(sigma);
  std::set<Quat> remaining(all.begin(), all.end());
  std::vector<ClassInfo> out;
  while (!remaining.empty()) {
    Quat r = *remaining.begin();
    std::vector<Quat> coset = double_coset(r);
    for (const auto& x : coset)
      if (remaining.erase(x) == 0) throw Error("internal: double cosets overlap at " + x.str());
    ClassInfo ci;
    ci.canonical = coset.front();
    ci.form = classify_form(r);
    ci.h_order = intersection_group(r).order;
    ci.size = 576 / ci.h_order;
    if (static_cast<std::int64_t>(coset.size()) != ci.size)
      throw Error("internal: double coset size mismatch at " + r.str());
    out.push_back(ci);
  }
  std::sort(out.begin(), out.end(), [](const ClassInfo& a, const ClassInfo& b) { return a.canonical < b.canonical; });
  for (auto& ci : out) {
    Quat inv = canonical_rep(conj(ci.canonical));
    if (inv != ci.canonical) {
      ci.paired = true;
      ci.partner = inv;
    }
  }
  if (grimmer) {
    std::vector<ClassInfo> merged;
    for (const auto& ci : out)
      if (!ci.paired || ci.canonical < ci.partner) merged.push_back(ci);
    return merged;
  }
  return out;
}

}  // namespace cslkit
