#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbifrob/linalg.hpp"
#include "orbifrob/report.hpp"

namespace orbifrob {

struct BasisElement {
  std::string label;
  int degree = 0;  // cohomological degree
  int parity = 0;  // Z/2 grading

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional unital algebra with a bilinear pairing, given by
/// structure constants e_i e_j = sum_k c_{ij}^k e_k and a Gram matrix.
///
/// The constructor only checks shapes. Use verify() for the algebra laws;
/// consumers that need the laws (the symmetric-product builder) require a
/// passing report before they accept an algebra.
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(std::string name, std::vector<BasisElement> basis, Vector unit, Matrix metric,
                   SparseTensor3 structure);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const Vector& unit() const noexcept { return unit_; }
  const SparseVec& unit_sparse() const noexcept { return unit_sparse_; }
  const Matrix& metric() const noexcept { return metric_; }
  const SparseTensor3& structure() const noexcept { return structure_; }

  /// e_i * e_j.
  const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector multiply(const Vector& a, const Vector& b) const;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  Scalar pair(const Vector& a, const Vector& b) const;

  int index_of(std::string_view label) const;
  bool is_commutative() const;
  bool is_even() const;
  /// Degree of the pairing: deg e_i + deg e_j over nonzero metric entries,
  /// if that value is the same for all of them.
  std::optional<int> top_degree() const;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  Vector unit_;
  SparseVec unit_sparse_;
  Matrix metric_;
  SparseTensor3 structure_;
  std::vector<SparseVec> products_;
};

/// Exhaustive check of associativity, unit, invariance, nondegeneracy,
/// grading and parity over all basis tuples.
Report verify(const FrobeniusAlgebra& a);

/// Columns are the dual basis: e^i = sum_j D(j, i) e_j with eta(e_i, e^k) = delta_ik.
Matrix dual_basis(const FrobeniusAlgebra& a);
/// Delta(1) = sum_i e_i (x) e^i as a vector on A (x) A, index i * dim + j.
Vector copairing(const FrobeniusAlgebra& a);
/// mu(Delta(1)).
Vector euler_class(const FrobeniusAlgebra& a);

/// Row-major mixed-radix indexing of A^{(x)m}: the first factor is the most
/// significant digit.
class TensorIndexer {
 public:
  TensorIndexer() = default;
  TensorIndexer(std::size_t base_dim, std::size_t factors);

  std::size_t factors() const noexcept { return factors_; }
  std::size_t base_dim() const noexcept { return base_dim_; }
  std::size_t size() const noexcept { return size_; }

  std::uint32_t encode(std::span<const std::uint32_t> digits) const;
  void decode(std::uint32_t index, std::span<std::uint32_t> digits) const;
  std::vector<std::uint32_t> decode(std::uint32_t index) const;

 private:
  std::size_t base_dim_ = 0;
  std::size_t factors_ = 0;
  std::size_t size_ = 1;
};

/// Tensor product of sparse vectors on A^{(x)m}, ordered as given.
SparseVec outer(std::span<const SparseVec> factors, std::size_t base_dim);

/// A^{(x)m} with factorwise product, metric and unit (m = 0 is the ground field).
class TensorPower {
 public:
  TensorPower(const FrobeniusAlgebra& a, std::size_t m);

  const FrobeniusAlgebra& base() const noexcept { return *a_; }
  std::size_t factors() const noexcept { return index_.factors(); }
  std::size_t dim() const noexcept { return index_.size(); }
  const TensorIndexer& indexer() const noexcept { return index_; }

  std::string label(std::uint32_t index) const;
  int degree(std::uint32_t index) const;
  int parity(std::uint32_t index) const;
  SparseVec unit() const;

  SparseVec multiply_basis(std::uint32_t x, std::uint32_t y) const;
  SparseVec multiply(const SparseVec& u, const SparseVec& v) const;
  Scalar pair_basis(std::uint32_t x, std::uint32_t y) const;
  Scalar pair(const SparseVec& u, const SparseVec& v) const;

 private:
  const FrobeniusAlgebra* a_;
  TensorIndexer index_;
};

/// Label used for tensor basis elements: factor labels joined by "⊗".
inline constexpr std::string_view kTensorSeparator = "⊗";

}  // namespace orbifrob
