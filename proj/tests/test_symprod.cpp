#include <doctest.h>

#include <array>

#include "generators.hpp"
#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"
#include "orbifrob/models.hpp"
#include "orbifrob/symprod.hpp"

using namespace orbifrob;

namespace {

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

SparseVec tensor(const SymmetricProduct& sp, std::initializer_list<std::uint32_t> digits) {
  return SparseVec::unit(sp.power(digits.size()).indexer().encode(std::vector<std::uint32_t>(digits)));
}

SparseVec one_x_plus_x_one(const SymmetricProduct& sp) { return tensor(sp, {0, 1}) + tensor(sp, {1, 0}); }

Matrix scaled(Matrix m, const Scalar& c) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= c;
  return m;
}

SparseVec unit_of(const SymmetricProduct& sp, int g) { return sp.power(sp.orbits(g).size()).unit(); }

}  // namespace

TEST_CASE("restriction examples") {
  const SymmetricProduct sp2(models::dual_numbers(), 2);
  const std::array<Permutation, 1> e2{Permutation::identity(2)}, tau{P("(1 2)", 2)};
  CHECK(restriction(sp2, e2, tau, tensor(sp2, {0, 1})) == SparseVec::unit(1));
  CHECK(restriction(sp2, e2, tau, sp2.power(2).unit()) == sp2.power(1).unit());
  const SymmetricProduct sp3(models::surface(), 3);
  const std::array<Permutation, 1> from{P("(1 2)", 3)};
  const std::array<Permutation, 2> to{P("(1 2)", 3), P("(1 3)", 3)};
  // a⊗b ↦ ab = t
  CHECK(restriction(sp3, from, to, tensor(sp3, {1, 2})) == SparseVec::unit(3));
  CHECK_THROWS(restriction(sp3, to, from, SparseVec::unit(0)));
}

TEST_CASE("pushforward examples") {
  const SymmetricProduct sp2(models::dual_numbers(), 2);
  const std::array<Permutation, 1> e2{Permutation::identity(2)}, tau{P("(1 2)", 2)};
  CHECK(pushforward(sp2, e2, tau, SparseVec::unit(0)) == one_x_plus_x_one(sp2));
  const SymmetricProduct k3(models::ground_field(), 3);
  const std::array<Permutation, 1> e3{Permutation::identity(3)}, c3{P("(1 2 3)", 3)};
  CHECK(pushforward(k3, e3, c3, restriction(k3, e3, c3, SparseVec::unit(0))) == SparseVec::unit(0));
}

TEST_CASE("pushforward is the metric adjoint of restriction") {
  for (const auto& base : {models::dual_numbers(), models::surface()})
    for (int n = 2; n <= 3; ++n) {
      const SymmetricProduct sp(base, n);
      const int order = static_cast<int>(sp.group().order());
      for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) {
          const std::array<Permutation, 2> gens{sp.element(g), sp.element(h)};
          const OrbitPartition coarse = group_orbits(gens, n);
          const OrbitPartition& fine = sp.orbits(g);
          const TensorPower& pf = sp.power(fine.size());
          const TensorPower& pc = sp.power(coarse.size());
          for (std::uint32_t x = 0; x < pf.dim(); ++x)
            for (std::uint32_t y = 0; y < pc.dim(); ++y) {
              const Scalar lhs = pf.pair(sp.pushforward(fine, coarse, SparseVec::unit(y)), SparseVec::unit(x));
              const Scalar rhs = pc.pair(SparseVec::unit(y), sp.restrict(fine, coarse, SparseVec::unit(x)));
              CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("obstruction exponent examples") {
  const std::vector<int> two{0, 1}, three{0, 1, 2};
  CHECK(obstruction_exponent(P("(1 2)", 2), P("(1 2)", 2), two) == 0);
  CHECK(obstruction_exponent(P("(1 2 3)", 3), P("(1 2 3)", 3), three) == 1);
  CHECK(obstruction_exponent(P("(1 2)", 3), P("(1 3)", 3), three) == 0);
}

TEST_CASE("obstruction exponents are nonnegative integers for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate(n);
    for (const auto& s : all)
      for (const auto& t : all) {
        const std::array<Permutation, 2> gens{s, t};
        const OrbitPartition orbits = group_orbits(gens, n);
        for (const auto& b : orbits.blocks()) CHECK(obstruction_exponent(s, t, b) >= 0);
      }
  }
}

TEST_CASE("product examples by both routes") {
  const SymmetricProduct sp2(models::dual_numbers(), 2);
  const int tau = sp2.index_of(P("(1 2)", 2));
  CHECK(sp2.multiply_pushforward(tau, SparseVec::unit(0), tau, SparseVec::unit(0)) == one_x_plus_x_one(sp2));
  CHECK(sp2.multiply_chain(tau, SparseVec::unit(0), tau, SparseVec::unit(0)) == one_x_plus_x_one(sp2));

  const SymmetricProduct sp3(models::dual_numbers(), 3);
  const int c = sp3.index_of(P("(1 2 3)", 3));
  CHECK(sp3.group().mul(c, c) == sp3.index_of(P("(1 3 2)", 3)));
  const SparseVec two_x = SparseVec::unit(1, Scalar(2));
  CHECK(sp3.multiply_pushforward(c, SparseVec::unit(0), c, SparseVec::unit(0)) == two_x);
  CHECK(sp3.multiply_chain(c, SparseVec::unit(0), c, SparseVec::unit(0)) == two_x);

  const int a = sp3.index_of(P("(1 2)", 3)), b = sp3.index_of(P("(1 3)", 3));
  CHECK(sp3.group().mul(a, b) == sp3.index_of(P("(1 3 2)", 3)));
  CHECK(sp3.multiply_pushforward(a, unit_of(sp3, a), b, unit_of(sp3, b)) == SparseVec::unit(0));
  CHECK(sp3.multiply_chain(a, unit_of(sp3, a), b, unit_of(sp3, b)) == SparseVec::unit(0));
}

TEST_CASE("minimal transposition words") {
  const Permutation c = P("(1 2 3)", 3);
  const auto greedy = minimal_transposition_word(c);
  REQUIRE(greedy.size() == 2);
  CHECK(greedy[0] * greedy[1] == c);
  const auto all = minimal_transposition_words(c);
  CHECK(all.size() == 3);
  const std::vector<Permutation> written{P("(1 3)", 3), P("(1 2)", 3)};
  CHECK(std::find(all.begin(), all.end(), written) != all.end());
  CHECK(contraction_steps(c, written).size() == 1);
  CHECK(contraction_steps(c, greedy).size() == 1);
  CHECK(minimal_transposition_word(Permutation::identity(4)).empty());
  // Cayley count k^{k-2} for a k-cycle
  CHECK(minimal_transposition_words(P("(1 2 3 4)", 4)).size() == 16);
  for (int t = 0; t < 100; ++t) {
    const Permutation p = gen::permutation(6);
    const auto w = minimal_transposition_word(p);
    CHECK(static_cast<int>(w.size()) == degree(p));
    Permutation prod = Permutation::identity(6);
    for (const auto& x : w) prod = prod * x;
    CHECK(prod == p);
  }
}

TEST_CASE("chain product with identity factor and explicit words") {
  const SymmetricProduct sp(models::surface(), 3);
  const int c = sp.index_of(P("(1 2 3)", 3));
  const SparseVec a = SparseVec::unit(1) + SparseVec::unit(3, Scalar(2));
  CHECK(sp.multiply_chain(c, a, 0, sp.power(3).unit()) == a);
  CHECK(contraction_steps(sp.element(c), std::vector<Permutation>{}).empty());
  for (const auto& w : minimal_transposition_words(sp.element(c)))
    CHECK(sp.multiply_chain(c, SparseVec::unit(0), c, SparseVec::unit(0), w) == SparseVec::unit(3, Scalar(4)));
  const std::vector<Permutation> not_minimal{P("(1 2)", 3), P("(1 2)", 3), P("(1 3)", 3), P("(1 2)", 3)};
  CHECK_THROWS_AS(sp.multiply_chain(c, a, c, a, not_minimal), InvalidArgument);
}

TEST_CASE("chain and pushforward agree on random elements") {
  const SymmetricProduct sp(models::surface(), 3);
  const int order = static_cast<int>(sp.group().order());
  auto random = [&](int g) {
    SparseVec v;
    for (std::uint32_t i = 0; i < sp.sector_dim(g); ++i)
      if (gen::integer(0, 3) == 0) v.add_scaled(SparseVec::unit(i), gen::scalar());
    return v;
  };
  for (int t = 0; t < 60; ++t) {
    const int g = static_cast<int>(gen::integer(0, order - 1)), h = static_cast<int>(gen::integer(0, order - 1));
    const SparseVec a = random(g), b = random(h);
    CHECK(sp.multiply_chain(g, a, h, b) == sp.multiply_pushforward(g, a, h, b));
  }
}

TEST_CASE("build") {
  const SymmetricProduct sp(models::dual_numbers(), 2);
  const GFrobeniusAlgebra x = sp.build();
  CHECK(x.dim(0) == 4);
  CHECK(x.dim(1) == 2);
  CHECK(verify_axioms(x).passed());
  const SymmetricProduct sp3(models::ground_field(), 3);
  const GFrobeniusAlgebra k3 = sp3.build();
  const FiniteGroup& g = k3.group();
  CHECK(k3.same_structure(twisted_group_ring(g, Cocycle2::trivial(g), SuperTwist::trivial(g))));
  const int a = sp3.index_of(P("(1 2)", 3)), b = sp3.index_of(P("(1 3)", 3)), c = sp3.index_of(P("(2 3)", 3));
  CHECK(k3.act(a, b, SparseVec::unit(0)) == SparseVec::unit(0));
  CHECK(g.conj(a, b) == c);
}

TEST_CASE("parallel build equals the serial reference") {
  for (const auto& base : {models::dual_numbers(), models::surface()}) {
    const SymmetricProduct sp(base, 3);
    SymprodOptions one, many;
    one.jobs = 1;
    many.jobs = 4;
    const GFrobeniusAlgebra ref = sp.build_reference(one);
    CHECK(sp.build(one) == ref);
    CHECK(sp.build(many) == ref);
  }
}

TEST_CASE("build preconditions") {
  SymprodOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(SymmetricProduct(models::surface(), 3).build(tiny), BudgetExceeded);
  const FrobeniusAlgebra d = models::dual_numbers();
  std::vector<BasisElement> odd = d.basis();
  odd[1].parity = 1;
  const FrobeniusAlgebra odd_base("odd", odd, d.unit(), d.metric(), d.structure());
  CHECK_THROWS_AS(SymmetricProduct(odd_base, 2), InvalidArgument);
  Matrix bad(2, 2);
  bad(1, 1) = Scalar(1);
  CHECK_THROWS_AS(SymmetricProduct(FrobeniusAlgebra("bad", d.basis(), d.unit(), bad, d.structure()), 2),
                  InvalidArgument);
}

TEST_CASE("n = 1 echoes the base") {
  const FrobeniusAlgebra a = models::surface();
  const GFrobeniusAlgebra x = SymmetricProduct(a, 1).build();
  REQUIRE(x.order() == 1);
  CHECK(x.basis(0) == a.basis());
  CHECK(x.metric(0) == a.metric());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) CHECK(x.product(0, 0).column(i * a.dim() + j) == a.product(i, j));
}

TEST_CASE("hilbert twist examples") {
  const SymmetricProduct sp(models::dual_numbers(), 3);
  const GFrobeniusAlgebra x = sp.build();
  const GFrobeniusAlgebra h = hilbert_twist(x);
  const int c = sp.index_of(P("(1 2 3)", 3));
  CHECK(h.multiply(c, SparseVec::unit(0), c, SparseVec::unit(0)) == SparseVec::unit(1, Scalar(-2)));
  const int tau = sp.index_of(P("(1 2)", 3));
  CHECK(h.metric(tau) == scaled(x.metric(tau), Scalar(-1)));
  const int a = tau, b = sp.index_of(P("(1 3)", 3));
  CHECK(h.product(a, b) == x.product(a, b));
  CHECK(verify_axioms(h).passed());
}

TEST_CASE("qw twist examples") {
  const SymmetricProduct sp(models::dual_numbers(), 2);
  const GFrobeniusAlgebra x = sp.build();
  CHECK(qw_twist(x, Scalar(1)) == x);
  CHECK(qw_twist(x, Scalar(-1)) == hilbert_twist(x));
  const GFrobeniusAlgebra y = qw_twist(x, Scalar(2));
  CHECK(y.multiply(1, SparseVec::unit(0), 1, SparseVec::unit(0)) == one_x_plus_x_one(sp).scaled(Scalar(2)));
  CHECK(y.metric(1) == scaled(x.metric(1), Scalar(2)));
  CHECK_THROWS_AS(qw_twist(x, Scalar(0)), InvalidArgument);
}

TEST_CASE("gamma data examples") {
  const SymmetricProduct sp2(models::dual_numbers(), 2);
  const GammaData t = gamma_data(sp2, 1, 1);
  CHECK(t.tilde == SparseVec::unit(0));
  CHECK(t.perp == one_x_plus_x_one(sp2));
  CHECK(t.restricted == t.perp);
  const SymmetricProduct sp3(models::dual_numbers(), 3);
  const int c = sp3.index_of(P("(1 2 3)", 3));
  const GammaData cc = gamma_data(sp3, c, c);
  CHECK(cc.tilde == SparseVec::unit(1, Scalar(2)));
  CHECK(cc.restricted == SparseVec::unit(1, Scalar(2)));
  const int a = sp3.index_of(P("(1 2)", 3)), b = sp3.index_of(P("(1 3)", 3));
  CHECK(gamma_data(sp3, a, b).restricted == SparseVec::unit(0));
}

TEST_CASE("gamma decomposes as bar times perp") {
  for (int n = 2; n <= 3; ++n) {
    const SymmetricProduct sp(models::surface(), n);
    const int order = static_cast<int>(sp.group().order());
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h) {
        const GammaData d = gamma_data(sp, g, h);
        const TensorPower& p = sp.power(sp.orbits(sp.group().mul(g, h)).size());
        CHECK(d.restricted == p.multiply(d.bar, d.perp));
      }
  }
}

TEST_CASE("compatible pairs on S_3") {
  const SymmetricProduct sp(models::dual_numbers(), 3);
  CHECK(check_compatible_pair(sp, 0, false).passed());
  CHECK(check_compatible_pair(sp, 1, true).passed());
}
