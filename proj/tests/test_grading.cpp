#include <doctest.h>

#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"
#include "orbifrob/grading.hpp"
#include "orbifrob/models.hpp"
#include "orbifrob/symprod.hpp"

using namespace orbifrob;

namespace {

std::vector<Scalar> sorted(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end());
  return v;
}

HalfPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
  HalfPoly p;
  for (auto [e, c] : terms) p.add(e, c);
  return p;
}

HalfPoly times(const HalfPoly& a, const HalfPoly& b) {
  HalfPoly out;
  for (const auto& [e1, c1] : a.coeffs)
    for (const auto& [e2, c2] : b.coeffs) out.add(e1 + e2, c1 * c2);
  return out;
}

}  // namespace

TEST_CASE("shifts from eigenvalues") {
  const ShiftData trivial = shifts_from_eigenvalues(Scalar(8), {Scalar(8), Scalar(4)}, {{0, 0}, {0, 0}});
  CHECK(trivial.s_minus == std::vector<Scalar>{Scalar(0), Scalar(0)});
  CHECK(trivial.s == std::vector<Scalar>{Scalar(0), Scalar(2)});
  const ShiftData cyc = shifts_from_eigenvalues(Scalar(0), {Scalar(0)}, {{Scalar(0), Scalar(1, 4), Scalar(1, 2), Scalar(3, 4)}});
  CHECK(cyc.s_minus[0].is_zero());
  const ShiftData single = shifts_from_eigenvalues(Scalar(0), {Scalar(0)}, {{Scalar(1, 3)}});
  CHECK(single.s_minus[0] == Scalar(-1, 3));
  CHECK_THROWS_AS(shifts_from_eigenvalues(Scalar(0), {Scalar(0)}, {{Scalar(1)}}), InvalidArgument);
  CHECK_THROWS_AS(shifts_from_eigenvalues(Scalar(0), {Scalar(0)}, {{Scalar(-1, 2)}}), InvalidArgument);
}

TEST_CASE("permutation eigenangles") {
  for (const auto& t : permutation_eigenangles(Permutation::identity(3), 1)) CHECK(t.is_zero());
  CHECK(sorted(permutation_eigenangles(Permutation::parse("(1 2)", 2), 1)) ==
        std::vector<Scalar>{Scalar(0), Scalar(1, 2)});
  CHECK(sorted(permutation_eigenangles(Permutation::parse("(1 2 3)", 3), 2)) ==
        std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(1, 3), Scalar(1, 3), Scalar(2, 3), Scalar(2, 3)});
}

TEST_CASE("s_minus vanishes on permutation representations, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate(n))
      for (int copies = 1; copies <= 2; ++copies) {
        Scalar sum;
        for (const auto& t : permutation_eigenangles(p, copies))
          if (!t.is_zero()) sum += Scalar(2) * t - Scalar(1);
        CHECK(sum.is_zero());
      }
}

TEST_CASE("standard shifts of symmetric products") {
  const GFrobeniusAlgebra k3 = SymmetricProduct(models::surface(), 2).build();
  const ShiftData s = standard_shifts(k3, 2);
  CHECK(s.s[1] == Scalar(2));
  CHECK(s.d == Scalar(8));
  CHECK(s.d_g[1] == Scalar(4));
  for (const auto& base : {models::dual_numbers(), models::surface()}) {
    const Scalar top(*base.top_degree());
    for (int n = 1; n <= 4; ++n) {
      const GFrobeniusAlgebra x = SymmetricProduct(base, n).build();
      const ShiftData sh = standard_shifts(x);
      const FiniteGroup& g = x.group();
      for (int e = 0; e < static_cast<int>(g.order()); ++e) {
        const auto ue = static_cast<std::size_t>(e);
        CHECK(sh.s_minus[ue].is_zero());
        CHECK(sh.s[ue] == top * Scalar(degree(g.permutations()[ue])) / Scalar(2));
        CHECK(sh.s[ue] + sh.s[static_cast<std::size_t>(g.inv(e))] == sh.d - sh.d_g[ue]);
        CHECK(sh.s_plus[ue] == sh.s_plus[static_cast<std::size_t>(g.inv(e))]);
      }
    }
  }
  const FiniteGroup z2({"e", "s"}, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(standard_shifts(twisted_group_ring(z2, Cocycle2::trivial(z2), SuperTwist::trivial(z2))),
                  InvalidArgument);
}

TEST_CASE("poincare polynomials") {
  const FiniteGroup s2 = FiniteGroup::symmetric(2);
  const auto k2 = twisted_group_ring(s2, Cocycle2::trivial(s2), SuperTwist::trivial(s2));
  const PoincareData flat = shifted_poincare(k2, zero_shifts(k2), false);
  CHECK(flat.total == poly({{0, 2}}));
  CHECK(flat.total.str() == "2");

  const GFrobeniusAlgebra x = SymmetricProduct(models::dual_numbers(), 2).build();
  const PoincareData inv = shifted_poincare(x, standard_shifts(x), true);
  // t^0 + t^2 + t^4 from Sym^2, t^1 + t^3 from the shifted twisted sector
  CHECK(inv.total == poly({{0, 1}, {4, 1}, {8, 1}, {2, 1}, {6, 1}}));
  CHECK(inv.per_class[0] == poly({{0, 1}, {4, 1}, {8, 1}}));
  CHECK(inv.per_class[1] == poly({{2, 1}, {6, 1}}));
  CHECK(inv.total.str() == "1 + t + t^2 + t^3 + t^4");
}

TEST_CASE("unshifted total is the sum of sector tensor powers") {
  for (const auto& base : {models::dual_numbers(), models::surface()}) {
    HalfPoly pa;
    for (const auto& b : base.basis()) pa.add(2 * b.degree);
    for (int n = 1; n <= 3; ++n) {
      const GFrobeniusAlgebra x = SymmetricProduct(base, n).build();
      HalfPoly expect;
      for (const auto& p : x.group().permutations()) {
        HalfPoly sector = poly({{0, 1}});
        for (int k = 0; k < cycle_count(p); ++k) sector = times(sector, pa);
        for (const auto& [e, c] : sector.coeffs) expect.add(e, c);
      }
      CHECK(shifted_poincare(x, zero_shifts(x), false).total == expect);
    }
  }
}

TEST_CASE("half-integer exponents print with braces") {
  CHECK(poly({{1, 1}, {0, 3}, {3, -2}}).str() == "3 + t^{1/2} - 2t^{3/2}");
  CHECK(HalfPoly{}.str() == "0");
}
