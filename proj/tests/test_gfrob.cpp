#include <doctest.h>

#include <map>
#include <tuple>

#include "oracles.hpp"
#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"
#include "orbifrob/gfrob.hpp"
#include "orbifrob/models.hpp"
#include "orbifrob/symprod.hpp"

using namespace orbifrob;

namespace {

GFrobeniusAlgebra group_ring(int n) {
  const FiniteGroup g = FiniteGroup::symmetric(n);
  return twisted_group_ring(g, Cocycle2::trivial(g), SuperTwist::trivial(g));
}

GFrobeniusAlgebra sp(const FrobeniusAlgebra& a, int n) { return SymmetricProduct(a, n).build(); }

}  // namespace

TEST_CASE("group ring passes, a perturbed metric fails d") {
  GFrobeniusAlgebra x = group_ring(3);
  CHECK(verify_axioms(x).passed());
  const int g = x.group().index_of(Permutation::parse("(1 2 3)", 3));
  x.metric(g)(0, 0) = Scalar(2);
  const Report r = verify_axioms(x);
  REQUIRE(r.find("d") != nullptr);
  CHECK_FALSE(r.find("d")->passed);
  CHECK(r.find("d")->witness.has_value());
}

TEST_CASE("second quantization of Q[x]/x^2 at n=2 passes") {
  const GFrobeniusAlgebra x = sp(models::dual_numbers(), 2);
  CHECK(x.dim(0) == 4);
  CHECK(x.dim(1) == 2);
  CHECK(verify_axioms(x).passed());
}

TEST_CASE("malformed tables are reported before axioms") {
  GFrobeniusAlgebra x = group_ring(2);
  x.metric(1) = Matrix(2, 1);
  const Report r = verify_axioms(x);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks.front().id == "structure");
  CHECK_FALSE(r.passed());
}

TEST_CASE("verification budget") {
  const GFrobeniusAlgebra x = sp(models::dual_numbers(), 3);
  VerifyOptions o;
  o.budget = 10;
  CHECK_THROWS_AS(verify_axioms(x, o), BudgetExceeded);
}

TEST_CASE("verification is independent of the thread count") {
  GFrobeniusAlgebra x = sp(models::dual_numbers(), 3);
  x.product(1, 1).column(0) = SparseVec::unit(0, Scalar(7));
  VerifyOptions one, many;
  one.jobs = 1;
  many.jobs = 4;
  CHECK(verify_axioms(x, one).text() == verify_axioms(x, many).text());
}

TEST_CASE("tensor_hat") {
  const GFrobeniusAlgebra x = sp(models::dual_numbers(), 2);
  const GFrobeniusAlgebra unit = group_ring(2);
  CHECK(tensor_hat(x, unit).same_structure(x));
  const GFrobeniusAlgebra xx = tensor_hat(x, x);
  for (int g = 0; g < 2; ++g) CHECK(xx.dim(g) == x.dim(g) * x.dim(g));
  CHECK(verify_axioms(xx).passed());
  const FiniteGroup g2 = FiniteGroup::symmetric(2);
  const Cocycle2 a = normalized_sn_cocycle(2, Scalar(-1));
  const Cocycle2 b = normalized_sn_cocycle(2, Scalar(3));
  const auto ka = twisted_group_ring(g2, a, SuperTwist::trivial(g2));
  const auto kb = twisted_group_ring(g2, b, SuperTwist::trivial(g2));
  const auto kab = twisted_group_ring(g2, a * b, SuperTwist::trivial(g2));
  CHECK(tensor_hat(ka, kb).same_structure(kab));
  CHECK_THROWS(tensor_hat(x, group_ring(3)));
}

TEST_CASE("tensor_hat is associative") {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  const auto x = sp(models::dual_numbers(), 3);
  const auto ka = twisted_group_ring(g, normalized_sn_cocycle(3, Scalar(2)), SuperTwist::trivial(g));
  const auto ks = twisted_group_ring(g, Cocycle2::trivial(g), sign_supertwist(3));
  CHECK(tensor_hat(tensor_hat(x, ka), ks).same_structure(tensor_hat(x, tensor_hat(ka, ks))));
}

TEST_CASE("twist examples") {
  const auto x = sp(models::dual_numbers(), 3);
  const FiniteGroup& g = x.group();
  CHECK(twist(x, Cocycle2::trivial(g), SuperTwist::trivial(g)) == x);
  const FiniteGroup g2 = FiniteGroup::symmetric(2);
  const auto k2 = group_ring(2);
  const auto k2a = twist(k2, normalized_sn_cocycle(2, Scalar(-1)), SuperTwist::trivial(g2));
  CHECK(k2a.metric(1)(0, 0) == -k2.metric(1)(0, 0));
  Cocycle2 bad = Cocycle2::trivial(g);
  bad.set(1, 1, Scalar(0));
  CHECK_THROWS_AS(twist(x, bad, SuperTwist::trivial(g)), InvalidArgument);
}

TEST_CASE("twisting preserves the axioms") {
  for (int n = 2; n <= 4; ++n) {
    const auto x = sp(models::dual_numbers(), n);
    const FiniteGroup& g = x.group();
    for (const Scalar& lambda : {Scalar(1), Scalar(-1), Scalar(2)})
      for (bool super : {false, true}) {
        const auto y = twist(x, normalized_sn_cocycle(n, lambda), super ? sign_supertwist(n) : SuperTwist::trivial(g));
        const Report r = verify_axioms(y);
        INFO("n=" << n << " lambda=" << lambda << " super=" << super << "\n" << r.text());
        CHECK(r.passed());
      }
  }
}

TEST_CASE("twists form a group action") {
  const auto x = sp(models::surface(), 3);
  const FiniteGroup& g = x.group();
  const Cocycle2 a = normalized_sn_cocycle(3, Scalar(-2, 3));
  const SuperTwist s = sign_supertwist(3);
  const SuperTwist none = SuperTwist::trivial(g);
  CHECK(twist(twist(x, a, none), a.inverse(), none) == x);
  CHECK(twist(twist(x, Cocycle2::trivial(g), s), Cocycle2::trivial(g), s) == x);
  CHECK(twist(twist(x, a, s), a.inverse(), s) == x);
}

TEST_CASE("invariants") {
  CHECK(invariants(group_ring(3)).dim() == 3);
  const auto inv = invariants(sp(models::dual_numbers(), 2));
  CHECK(inv.dim() == 5);
  CHECK(inv.class_dims() == std::vector<std::size_t>{3, 2});
  CHECK_FALSE(inv.metric_degenerate);
}

TEST_CASE("invariant products are commutative and dimensions match the oracle") {
  std::vector<GFrobeniusAlgebra> algebras{group_ring(3), group_ring(4), sp(models::dual_numbers(), 3),
                                          sp(models::surface(), 2)};
  algebras.push_back(hilbert_twist(algebras[2]));
  for (const auto& x : algebras) {
    const InvariantAlgebra inv = invariants(x);
    CHECK(inv.dim() == oracle::invariant_dimension(x));
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Scalar> c;
    for (const auto& e : inv.structure.entries) c[{e.i, e.j, e.k}] = e.value;
    for (const auto& [key, v] : c) {
      const auto& [i, j, k] = key;
      const auto it = c.find({j, i, k});
      REQUIRE(it != c.end());
      CHECK(it->second == v);
    }
  }
}

TEST_CASE("action on the own sector is the identity for symmetric products") {
  const auto x = sp(models::surface(), 3);
  for (int g = 0; g < static_cast<int>(x.order()); ++g) {
    CHECK(x.character(g).is_one());
    CHECK(x.action(g, g).to_dense() == Matrix::identity(x.dim(g)));
  }
}

TEST_CASE("format_element") {
  const auto x = sp(models::dual_numbers(), 3);
  const int c = x.group().index_of(Permutation::parse("(1 3 2)", 3));
  CHECK(format_element(x, c, SparseVec::unit(1, Scalar(2))) == "2x@(1 3 2)");
  CHECK(format_element(x, c, SparseVec::unit(1, Scalar(-2))) == "-2x@(1 3 2)");
  CHECK(format_element(x, c, SparseVec{}) == "0@(1 3 2)");
  CHECK(format_element(x, c, SparseVec::unit(0, Scalar(1, 2))) == "1/2*1@(1 3 2)");
}
