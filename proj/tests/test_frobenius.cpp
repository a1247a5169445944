#include <doctest.h>

#include "generators.hpp"
#include "orbifrob/frobenius.hpp"
#include "orbifrob/models.hpp"

using namespace orbifrob;

namespace {

const std::vector<FrobeniusAlgebra>& suite() {
  static const std::vector<FrobeniusAlgebra> all{models::ground_field(), models::dual_numbers(), models::surface()};
  return all;
}

Vector dense(const FrobeniusAlgebra& a, std::initializer_list<std::int64_t> v) {
  Vector out;
  for (auto x : v) out.emplace_back(x);
  out.resize(a.dim());
  return out;
}

FrobeniusAlgebra with_metric(const FrobeniusAlgebra& a, Matrix metric) {
  return FrobeniusAlgebra(a.name(), a.basis(), a.unit(), std::move(metric), a.structure());
}

}  // namespace

TEST_CASE("multiply in Q[x]/x^2") {
  const FrobeniusAlgebra a = models::dual_numbers();
  CHECK(a.multiply(dense(a, {0, 1}), dense(a, {0, 1})) == dense(a, {0, 0}));
  CHECK(a.multiply(dense(a, {1, 0}), dense(a, {0, 1})) == dense(a, {0, 1}));
  CHECK(a.multiply(dense(a, {1, 1}), dense(a, {1, 1})) == dense(a, {1, 2}));
}

TEST_CASE("verify the models") {
  for (const auto& a : suite()) CHECK(verify(a).passed());
}

TEST_CASE("verify reports invariance failure") {
  const FrobeniusAlgebra a = models::dual_numbers();
  Matrix eta(2, 2);
  eta(1, 1) = Scalar(1);
  const Report r = verify(with_metric(a, eta));
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("d") != nullptr);
  CHECK_FALSE(r.find("d")->passed);
  CHECK(r.find("d")->witness.has_value());
}

TEST_CASE("copairing of the models") {
  // Q[x]/x^2: 1⊗x + x⊗1, index i*2+j
  CHECK(copairing(models::dual_numbers()) == Vector{Scalar(0), Scalar(1), Scalar(1), Scalar(0)});
  CHECK(copairing(models::ground_field()) == Vector{Scalar(1)});
  // surface {1,a,b,t}: 1⊗t + a⊗b + b⊗a + t⊗1
  Vector expect(16);
  expect[0 * 4 + 3] = Scalar(1);
  expect[1 * 4 + 2] = Scalar(1);
  expect[2 * 4 + 1] = Scalar(1);
  expect[3 * 4 + 0] = Scalar(1);
  CHECK(copairing(models::surface()) == expect);
}

TEST_CASE("euler classes") {
  CHECK(euler_class(models::dual_numbers()) == Vector{Scalar(0), Scalar(2)});
  CHECK(euler_class(models::ground_field()) == Vector{Scalar(1)});
  CHECK(euler_class(models::surface()) == Vector{Scalar(0), Scalar(0), Scalar(0), Scalar(4)});
}

TEST_CASE("euler class is central, top degree, and the dual basis reconstructs") {
  for (const auto& a : suite()) {
    const Vector e = euler_class(a);
    const auto top = a.top_degree();
    REQUIRE(top.has_value());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!e[i].is_zero()) CHECK(a.basis()[i].degree == *top);
    const Matrix dual = dual_basis(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vector ei(a.dim());
      ei[i] = Scalar(1);
      CHECK(a.multiply(e, ei) == a.multiply(ei, e));
      // sum_k eta(e_i, e_k) e^k = e_i
      Vector back(a.dim());
      for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t j = 0; j < a.dim(); ++j) back[j] += a.metric()(i, k) * dual(j, k);
      CHECK(back == ei);
    }
  }
}

TEST_CASE("copairing is symmetric for the models") {
  for (const auto& a : suite()) {
    const Vector c = copairing(a);
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) CHECK(c[i * d + j] == c[j * d + i]);
  }
}

TEST_CASE("tensor powers") {
  const FrobeniusAlgebra a = models::dual_numbers();
  const TensorPower t2(a, 2);
  const std::uint32_t one_x = t2.indexer().encode(std::vector<std::uint32_t>{0, 1});
  const std::uint32_t x_one = t2.indexer().encode(std::vector<std::uint32_t>{1, 0});
  const std::uint32_t x_x = t2.indexer().encode(std::vector<std::uint32_t>{1, 1});
  CHECK(t2.multiply_basis(one_x, x_one) == SparseVec::unit(x_x));
  CHECK(t2.label(one_x) == "1⊗x");
  CHECK(t2.degree(x_x) == 4);
  CHECK(t2.pair_basis(one_x, x_one) == Scalar(1));
  const TensorPower t0(a, 0);
  CHECK(t0.dim() == 1);
  CHECK(t0.label(0) == "1");
  CHECK(t0.unit() == SparseVec::unit(0));
}

TEST_CASE("tensor power laws on random elements") {
  const FrobeniusAlgebra a = models::surface();
  const TensorPower t(a, 2);
  auto random = [&] {
    Vector v(t.dim());
    for (auto& c : v)
      if (gen::integer(0, 2) == 0) c = gen::scalar();
    return SparseVec::from_dense(v);
  };
  for (int k = 0; k < 50; ++k) {
    const SparseVec u = random(), v = random(), w = random();
    CHECK(t.multiply(t.multiply(u, v), w) == t.multiply(u, t.multiply(v, w)));
    CHECK(t.multiply(u, v) == t.multiply(v, u));
    CHECK(t.multiply(t.unit(), u) == u);
    CHECK(t.pair(t.multiply(u, v), w) == t.pair(u, t.multiply(v, w)));
  }
}

TEST_CASE("tensor indexer round trip") {
  const TensorIndexer ix(3, 4);
  CHECK(ix.size() == 81);
  for (std::uint32_t i = 0; i < 81; ++i) CHECK(ix.encode(ix.decode(i)) == i);
  CHECK(ix.encode(std::vector<std::uint32_t>{1, 0, 0, 0}) == 27);
}
