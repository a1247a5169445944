#include "orbifrob/models.hpp"

namespace orbifrob::models {

FrobeniusAlgebra ground_field() {
  Matrix eta(1, 1);
  eta(0, 0) = 1;
  SparseTensor3 mu;
  mu.entries.push_back({0, 0, 0, Scalar(1)});
  return FrobeniusAlgebra("k", {{"1", 0, 0}}, {Scalar(1)}, eta, mu);
}

FrobeniusAlgebra dual_numbers() {
  Matrix eta(2, 2);
  eta(0, 1) = 1;
  eta(1, 0) = 1;
  SparseTensor3 mu;
  mu.entries = {{0, 0, 0, Scalar(1)}, {0, 1, 1, Scalar(1)}, {1, 0, 1, Scalar(1)}};
  return FrobeniusAlgebra("dual_numbers", {{"1", 0, 0}, {"x", 2, 0}}, {Scalar(1), Scalar(0)}, eta, mu);
}

FrobeniusAlgebra surface() {
  Matrix eta(4, 4);
  eta(0, 3) = eta(3, 0) = 1;
  eta(1, 2) = eta(2, 1) = 1;
  SparseTensor3 mu;
  for (std::uint32_t i = 0; i < 4; ++i) {
    mu.entries.push_back({0, i, i, Scalar(1)});
    if (i != 0) mu.entries.push_back({i, 0, i, Scalar(1)});
  }
  mu.entries.push_back({1, 2, 3, Scalar(1)});
  mu.entries.push_back({2, 1, 3, Scalar(1)});
  return FrobeniusAlgebra("surface", {{"1", 0, 0}, {"a", 2, 0}, {"b", 2, 0}, {"t", 4, 0}},
                          {Scalar(1), Scalar(0), Scalar(0), Scalar(0)}, eta, mu);
}

}  // namespace orbifrob::models
