#include <doctest.h>

#include "generators.hpp"
#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"

using namespace orbifrob;

namespace {

int idx(const FiniteGroup& g, const char* s) { return g.index_of(Permutation::parse(s, g.symmetric_degree())); }

/// Coboundary of a random normalized 1-cochain times the sign cocycle.
Cocycle2 random_cocycle(const FiniteGroup& g) {
  std::vector<Scalar> f(g.order());
  for (auto& v : f) v = Scalar(gen::integer(1, 5), gen::integer(1, 5)) * Scalar(gen::integer(0, 1) ? 1 : -1);
  f[static_cast<std::size_t>(g.identity())] = Scalar(1);
  Cocycle2 a = normalized_sn_cocycle(g.symmetric_degree(), Scalar(-1));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const int xi = static_cast<int>(x), yi = static_cast<int>(y);
      a.set(xi, yi, a(xi, yi) * f[x] * f[y] / f[static_cast<std::size_t>(g.mul(xi, yi))]);
    }
  return a;
}

}  // namespace

TEST_CASE("validate") {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  CHECK(validate(Cocycle2::trivial(g)).passed());
  CHECK(validate(normalized_sn_cocycle(3, Scalar(-1))).passed());
  Cocycle2 bad = normalized_sn_cocycle(3, Scalar(-1));
  bad.set(idx(g, "(1 2)"), idx(g, "(1 3)"), Scalar(5));
  const Report r = validate(bad);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("cocycle") != nullptr);
  CHECK(r.find("cocycle")->witness.has_value());
}

TEST_CASE("epsilon") {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  for (const auto& v : epsilon(Cocycle2::trivial(g))) CHECK(v.is_one());
  for (int n = 2; n <= 4; ++n)
    for (const Scalar& lambda : {Scalar(-1), Scalar(2), Scalar(1, 3)})
      for (const auto& v : epsilon(normalized_sn_cocycle(n, lambda))) CHECK(v.is_one());
}

TEST_CASE("epsilon relation for a random cocycle on S_3") {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  const int n = static_cast<int>(g.order());
  for (int t = 0; t < 5; ++t) {
    const Cocycle2 a = random_cocycle(g);
    REQUIRE(validate(a).passed());
    const auto eps = epsilon(a);
    auto e = [&](int x, int y) { return eps[static_cast<std::size_t>(x * n + y)]; };
    for (int g1 = 0; g1 < n; ++g1)
      for (int g2 = 0; g2 < n; ++g2)
        for (int h = 0; h < n; ++h) CHECK(e(g.mul(g1, g2), h) == e(g1, g.conj(g2, h)) * e(g2, h));
  }
}

TEST_CASE("epsilon on commuting pairs is bimultiplicative and antisymmetric") {
  for (int deg = 3; deg <= 4; ++deg) {
    const FiniteGroup g = FiniteGroup::symmetric(deg);
    const int n = static_cast<int>(g.order());
    const Cocycle2 a = random_cocycle(g);
    const auto eps = epsilon(a);
    auto e = [&](int x, int y) { return eps[static_cast<std::size_t>(x * n + y)]; };
    for (int x = 0; x < n; ++x) {
      CHECK(e(x, g.identity()).is_one());
      CHECK(e(x, x).is_one());
      for (int y = 0; y < n; ++y) {
        if (!g.commute(x, y)) continue;
        CHECK(e(x, y) == e(y, x).inverse());
        for (int z = 0; z < n; ++z)
          if (g.commute(x, z) && g.commute(y, z)) CHECK(e(g.mul(x, y), z) == e(x, z) * e(y, z));
      }
    }
  }
}

TEST_CASE("normalized S_n cocycle values") {
  const FiniteGroup g3 = FiniteGroup::symmetric(3);
  const Cocycle2 a = normalized_sn_cocycle(3, Scalar(-1));
  CHECK(a(idx(g3, "(1 2 3)"), idx(g3, "(1 2)")) == Scalar(-1));
  CHECK(a(idx(g3, "(1 2)"), idx(g3, "(1 3)")) == Scalar(1));
  const FiniteGroup g2 = FiniteGroup::symmetric(2);
  CHECK(normalized_sn_cocycle(2, Scalar(-1))(1, 1) == Scalar(-1));
  CHECK_THROWS_AS(normalized_sn_cocycle(3, Scalar(0)), InvalidArgument);
  const auto& perms = g3.permutations();
  for (std::size_t x = 0; x < perms.size(); ++x)
    for (std::size_t y = 0; y < perms.size(); ++y)
      if (is_transversal(perms[x], perms[y])) CHECK(a(static_cast<int>(x), static_cast<int>(y)).is_one());
}

TEST_CASE("normalized cocycles multiply in lambda") {
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 3; ++t) {
      const Scalar l = gen::nonzero_scalar(), m = gen::nonzero_scalar();
      CHECK(normalized_sn_cocycle(n, l) * normalized_sn_cocycle(n, m) == normalized_sn_cocycle(n, l * m));
      CHECK(normalized_sn_cocycle(n, l).inverse() == normalized_sn_cocycle(n, l.inverse()));
    }
}

TEST_CASE("sign super twist") {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  const SuperTwist s = sign_supertwist(3);
  CHECK(s(idx(g, "(1 2)")) == 1);
  CHECK(s(idx(g, "(1 2 3)")) == 0);
  CHECK(s(g.identity()) == 0);
  CHECK(validate(s).passed());
  SuperTwist bad(g, std::vector<int>(g.order(), 1));
  CHECK_FALSE(validate(bad).passed());
}

TEST_CASE("twisted group rings") {
  const FiniteGroup g3 = FiniteGroup::symmetric(3);
  const GFrobeniusAlgebra plain = twisted_group_ring(g3, Cocycle2::trivial(g3), SuperTwist::trivial(g3));
  CHECK(verify_axioms(plain).passed());
  const FiniteGroup g2 = FiniteGroup::symmetric(2);
  const GFrobeniusAlgebra k2 = twisted_group_ring(g2, normalized_sn_cocycle(2, Scalar(-1)), SuperTwist::trivial(g2));
  CHECK(k2.metric(1)(0, 0) == Scalar(-1));
  Cocycle2 bad = Cocycle2::trivial(g3);
  bad.set(1, 2, Scalar(3));
  CHECK_THROWS_AS(twisted_group_ring(g3, bad, SuperTwist::trivial(g3)), InvalidArgument);
}

TEST_CASE("twisted group rings pass the axioms over the test matrix") {
  for (int n = 2; n <= 4; ++n) {
    const FiniteGroup g = FiniteGroup::symmetric(n);
    for (const Scalar& lambda : {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 3)})
      for (bool super : {false, true}) {
        const SuperTwist s = super ? sign_supertwist(n) : SuperTwist::trivial(g);
        const GFrobeniusAlgebra x = twisted_group_ring(g, normalized_sn_cocycle(n, lambda), s);
        const Report r = verify_axioms(x);
        INFO("n=" << n << " lambda=" << lambda << " super=" << super << "\n" << r.text());
        CHECK(r.passed());
      }
  }
}

TEST_CASE("k^{alpha,sigma}[G] is the graded tensor of k^alpha[G] and k^sigma[G]") {
  for (int n = 2; n <= 4; ++n) {
    const FiniteGroup g = FiniteGroup::symmetric(n);
    const Cocycle2 a = normalized_sn_cocycle(n, Scalar(-1));
    const SuperTwist s = sign_supertwist(n);
    const GFrobeniusAlgebra both = twisted_group_ring(g, a, s);
    const GFrobeniusAlgebra ka = twisted_group_ring(g, a, SuperTwist::trivial(g));
    const GFrobeniusAlgebra ks = twisted_group_ring(g, Cocycle2::trivial(g), s);
    CHECK(tensor_hat(ka, ks).same_structure(both));
  }
}
