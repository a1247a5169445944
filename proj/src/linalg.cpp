#include "orbifrob/linalg.hpp"

#include <algorithm>
#include <tuple>

#include "orbifrob/errors.hpp"

namespace orbifrob {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InvalidArgument("matrix-vector shape mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::unit(std::uint32_t index, Scalar value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(index, std::move(value));
  return v;
}

SparseVec SparseVec::from_dense(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.entries_.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

Scalar SparseVec::at(std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Scalar(0);
}

Vector SparseVec::to_dense(std::size_t dim) const {
  Vector out(dim);
  for (const auto& [i, v] : entries_) {
    if (i >= dim) throw InvalidArgument("sparse index out of range");
    out[i] = v;
  }
  return out;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec out(*this);
  out.scale(c);
  return out;
}

void SparseVec::scale(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return;
  }
  if (c.is_one()) return;
  for (auto& e : entries_) e.second *= c;
}

void SparseVec::add_scaled(const SparseVec& other, const Scalar& c) {
  if (c.is_zero() || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      Scalar s = a->second + b->second * c;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVec::normalize() {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  entries_ = std::move(out);
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  SparseVec out(a);
  out.add_scaled(b, Scalar(1));
  return out;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  SparseVec out(a);
  out.add_scaled(b, Scalar(-1));
  return out;
}

// ------------------------------------------------------------- Accumulator

void Accumulator::reset(std::size_t dim) {
  dense_.assign(dim, Scalar(0));
  touched_flag_.assign(dim, 0);
  touched_.clear();
}

void Accumulator::add(std::uint32_t index, const Scalar& value) {
  if (index >= dense_.size()) throw InvalidArgument("accumulator index out of range");
  if (!touched_flag_[index]) {
    touched_flag_[index] = 1;
    touched_.push_back(index);
  }
  dense_[index] += value;
}

void Accumulator::add_scaled(const SparseVec& v, const Scalar& c) {
  for (const auto& [i, x] : v.entries()) add(i, x * c);
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  for (std::uint32_t i : touched_) {
    if (!dense_[i].is_zero()) out.push_unchecked(i, std::move(dense_[i]));
    dense_[i] = Scalar(0);
    touched_flag_[i] = 0;
  }
  touched_.clear();
  return out;
}

// --------------------------------------------------------------- SparseMap

SparseVec SparseMap::apply(const SparseVec& v) const {
  Accumulator acc(out_dim_);
  for (const auto& [i, x] : v.entries()) {
    if (i >= in_dim_) throw InvalidArgument("sparse map input index out of range");
    acc.add_scaled(columns_[i], x);
  }
  return acc.take();
}

Matrix SparseMap::to_dense() const {
  Matrix m(out_dim_, in_dim_);
  for (std::size_t c = 0; c < in_dim_; ++c)
    for (const auto& [r, x] : columns_[c].entries()) m(r, c) = x;
  return m;
}

SparseMap SparseMap::from_dense(const Matrix& m) {
  SparseMap out(m.cols(), m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) out.columns_[c].push_unchecked(static_cast<std::uint32_t>(r), m(r, c));
  return out;
}

void SparseTensor3::canonicalize() {
  auto key = [](const Entry& e) { return std::tuple(e.i, e.j, e.k); };
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) { return key(a) < key(b); });
  for (std::size_t t = 1; t < entries.size(); ++t)
    if (key(entries[t]) == key(entries[t - 1])) throw InvalidArgument("duplicate structure-constant key");
  std::erase_if(entries, [](const Entry& e) { return e.value.is_zero(); });
}

// ------------------------------------------------------------- elimination

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work(m);
  return rref(work).size();
}

Vector solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  std::size_t coeff_rank = pivots.size();
  if (!pivots.empty() && pivots.back() == m.cols()) --coeff_rank;
  if (m.rows() == m.cols() && coeff_rank < m.cols()) throw SingularMatrix(coeff_rank, m.cols());
  if (!pivots.empty() && pivots.back() == m.cols()) throw InvalidArgument("solve: inconsistent system");
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("invert: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  const auto pivots = rref(aug);
  std::size_t left_rank = 0;
  for (std::size_t p : pivots)
    if (p < n) ++left_rank;
  if (left_rank < n) throw SingularMatrix(left_rank, n);
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix work(m);
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix metric_adjoint(const Matrix& m, const Matrix& eta_src, const Matrix& eta_dst) {
  if (eta_src.rows() != m.cols() || eta_dst.rows() != m.rows()) {
    throw InvalidArgument("metric_adjoint: metric shapes do not match the map");
  }
  return invert(eta_src) * m.transpose() * eta_dst;
}

// ----------------------------------------------------------- EchelonBasis

SparseVec EchelonBasis::reduce(SparseVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v.at(pivots_[r]);
    if (!c.is_zero()) v.add_scaled(rows_[r], -c);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::uint32_t pivot = v.entries().front().first;
  v.scale(v.entries().front().second.inverse());
  for (auto& row : rows_) {
    const Scalar c = row.at(pivot);
    if (!c.is_zero()) row.add_scaled(v, -c);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::vector<Scalar> EchelonBasis::coordinates(const SparseVec& v) const {
  std::vector<Scalar> coords(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) coords[r] = v.at(pivots_[r]);
  SparseVec check = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) check.add_scaled(rows_[r], -coords[r]);
  if (!check.empty()) throw InvalidArgument("vector is not in the span of the echelon basis");
  return coords;
}

std::size_t sparse_rank(std::vector<SparseVec> vectors) {
  EchelonBasis basis;
  for (auto& v : vectors) basis.insert(std::move(v));
  return basis.size();
}

}  // namespace orbifrob
