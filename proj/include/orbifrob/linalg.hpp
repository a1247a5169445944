#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orbifrob/scalar.hpp"

namespace orbifrob {

using Vector = std::vector<Scalar>;

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Vector apply(const Vector& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sparse vector: strictly increasing indices, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::uint32_t index, Scalar value = Scalar(1));
  static SparseVec from_dense(const Vector& v);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }

  Scalar at(std::uint32_t index) const;
  Vector to_dense(std::size_t dim) const;

  SparseVec scaled(const Scalar& c) const;
  void scale(const Scalar& c);
  /// this += c * other
  void add_scaled(const SparseVec& other, const Scalar& c);

  /// Appends without ordering checks; call normalize() afterwards.
  void push_unchecked(std::uint32_t index, Scalar value) { entries_.emplace_back(index, std::move(value)); }
  /// Sorts, merges duplicate indices and drops zeros.
  void normalize();

  friend bool operator==(const SparseVec& a, const SparseVec& b) = default;
  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);

 private:
  std::vector<Entry> entries_;
};

/// Dense scatter buffer for accumulating many sparse contributions into one
/// output vector of known dimension.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim = 0) { reset(dim); }
  void reset(std::size_t dim);
  void add(std::uint32_t index, const Scalar& value);
  void add_scaled(const SparseVec& v, const Scalar& c);
  /// Returns the collected sparse vector and clears the buffer.
  SparseVec take();

 private:
  std::vector<Scalar> dense_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<std::uint32_t> touched_;
};

/// Linear map stored column by column: column i is the image of basis vector i.
class SparseMap {
 public:
  SparseMap() = default;
  SparseMap(std::size_t in_dim, std::size_t out_dim) : in_dim_(in_dim), out_dim_(out_dim) { columns_.resize(in_dim); }

  std::size_t in_dim() const noexcept { return in_dim_; }
  std::size_t out_dim() const noexcept { return out_dim_; }
  const SparseVec& column(std::size_t i) const { return columns_[i]; }
  SparseVec& column(std::size_t i) { return columns_[i]; }

  SparseVec apply(const SparseVec& v) const;
  Matrix to_dense() const;
  static SparseMap from_dense(const Matrix& m);

  friend bool operator==(const SparseMap& a, const SparseMap& b) = default;

 private:
  std::size_t in_dim_ = 0;
  std::size_t out_dim_ = 0;
  std::vector<SparseVec> columns_;
};

/// Structure constants c_{ij}^k as a sparse list with unique keys.
struct SparseTensor3 {
  struct Entry {
    std::uint32_t i, j, k;
    Scalar value;
  };
  std::vector<Entry> entries;

  /// Sorts by key, rejects duplicates, drops zero values.
  void canonicalize();
};

/// Solves M x = b exactly. Throws SingularMatrix if M is square and singular.
Vector solve(const Matrix& m, const Vector& b);
/// Exact inverse. Throws SingularMatrix (carrying the rank) if singular.
Matrix invert(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space {x : M x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

/// Adjoint of M: V_src -> V_dst with respect to nondegenerate metrics,
/// i.e. the unique N with eta_src(N y, x) = eta_dst(y, M x). Computed as
/// eta_src^{-1} M^T eta_dst (eta given as Gram matrices).
Matrix metric_adjoint(const Matrix& m, const Matrix& eta_src, const Matrix& eta_dst);

/// Rank of a set of sparse vectors (exact elimination).
std::size_t sparse_rank(std::vector<SparseVec> vectors);

/// Incrementally maintained reduced echelon basis of a subspace.
///
/// Every stored vector has a distinct pivot with coefficient 1 and zeros at
/// all other pivots, so coordinates of a vector in the span are read off its
/// pivot entries.
class EchelonBasis {
 public:
  /// Adds v if it is independent of the current span; returns whether it was added.
  bool insert(SparseVec v);
  /// Reduces v against the basis; returns the residual (empty iff v in span).
  SparseVec reduce(SparseVec v) const;
  /// Coordinates of v in the stored basis; throws if v is not in the span.
  std::vector<Scalar> coordinates(const SparseVec& v) const;

  const std::vector<SparseVec>& vectors() const noexcept { return rows_; }
  const std::vector<std::uint32_t>& pivots() const noexcept { return pivots_; }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::vector<SparseVec> rows_;
  std::vector<std::uint32_t> pivots_;
};

}  // namespace orbifrob
