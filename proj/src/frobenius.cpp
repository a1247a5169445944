#include "orbifrob/frobenius.hpp"

#include <sstream>

#include "orbifrob/errors.hpp"

namespace orbifrob {

namespace {

std::string vec_str(const SparseVec& v, const std::vector<BasisElement>& basis) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, x] : v.entries()) {
    if (!first) os << " + ";
    first = false;
    os << x << "*" << basis[i].label;
  }
  return os.str();
}

}  // namespace

FrobeniusAlgebra::FrobeniusAlgebra(std::string name, std::vector<BasisElement> basis, Vector unit, Matrix metric,
                                   SparseTensor3 structure)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      unit_(std::move(unit)),
      metric_(std::move(metric)),
      structure_(std::move(structure)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw InvalidArgument("Frobenius algebra must have positive dimension");
  if (unit_.size() != n) throw InvalidArgument("unit vector has wrong length");
  if (metric_.rows() != n || metric_.cols() != n) throw InvalidArgument("metric has wrong shape");
  structure_.canonicalize();
  products_.assign(n * n, SparseVec{});
  for (const auto& e : structure_.entries) {
    if (e.i >= n || e.j >= n || e.k >= n) throw InvalidArgument("structure constant index out of range");
    products_[e.i * n + e.j].push_unchecked(e.k, e.value);
  }
  for (auto& p : products_) p.normalize();
  unit_sparse_ = SparseVec::from_dense(unit_);
}

SparseVec FrobeniusAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(dim());
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) acc.add_scaled(product(i, j), x * y);
  return acc.take();
}

Vector FrobeniusAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw InvalidArgument("multiply: dimension mismatch");
  return multiply(SparseVec::from_dense(a), SparseVec::from_dense(b)).to_dense(dim());
}

Scalar FrobeniusAlgebra::pair(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw InvalidArgument("pair: dimension mismatch");
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!b[j].is_zero() && !metric_(i, j).is_zero()) s += a[i] * metric_(i, j) * b[j];
  }
  return s;
}

int FrobeniusAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return static_cast<int>(i);
  return -1;
}

bool FrobeniusAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

bool FrobeniusAlgebra::is_even() const {
  for (const auto& b : basis_)
    if (b.parity % 2 != 0) return false;
  return true;
}

std::optional<int> FrobeniusAlgebra::top_degree() const {
  std::optional<int> d;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (metric_(i, j).is_zero()) continue;
      const int s = basis_[i].degree + basis_[j].degree;
      if (d && *d != s) return std::nullopt;
      d = s;
    }
  return d;
}

Report verify(const FrobeniusAlgebra& a) {
  const std::size_t n = a.dim();
  const auto& basis = a.basis();
  auto label = [&](std::size_t i) { return basis[i].label; };
  Report report;
  report.subject = "Frobenius algebra '" + a.name() + "'";

  CheckResult assoc{"a", "Associativity", true, 0, std::nullopt};
  for (std::size_t i = 0; i < n && assoc.passed; ++i)
    for (std::size_t j = 0; j < n && assoc.passed; ++j)
      for (std::size_t k = 0; k < n && assoc.passed; ++k) {
        ++assoc.instances;
        const auto lhs = a.multiply(a.product(i, j), SparseVec::unit(static_cast<std::uint32_t>(k)));
        const auto rhs = a.multiply(SparseVec::unit(static_cast<std::uint32_t>(i)), a.product(j, k));
        if (lhs != rhs) {
          assoc.passed = false;
          assoc.witness = Witness{"(" + label(i) + "*" + label(j) + ")*" + label(k), vec_str(lhs, basis),
                                  vec_str(rhs, basis)};
        }
      }
  report.checks.push_back(std::move(assoc));

  CheckResult unit{"c", "Unit", true, 0, std::nullopt};
  for (std::size_t i = 0; i < n && unit.passed; ++i) {
    ++unit.instances;
    const auto e = SparseVec::unit(static_cast<std::uint32_t>(i));
    const auto left = a.multiply(a.unit_sparse(), e);
    const auto right = a.multiply(e, a.unit_sparse());
    if (left != e || right != e) {
      unit.passed = false;
      unit.witness = Witness{"1*" + label(i) + " and " + label(i) + "*1", vec_str(left, basis) + " / " +
                             vec_str(right, basis), vec_str(e, basis)};
    }
  }
  report.checks.push_back(std::move(unit));

  CheckResult inv{"d", "Invariance of the metric", true, 0, std::nullopt};
  const auto& eta = a.metric();
  auto eta_vec = [&](const SparseVec& x, std::size_t k) {
    Scalar s;
    for (const auto& [i, v] : x.entries())
      if (!eta(i, k).is_zero()) s += v * eta(i, k);
    return s;
  };
  auto eta_vec_left = [&](std::size_t i, const SparseVec& x) {
    Scalar s;
    for (const auto& [k, v] : x.entries())
      if (!eta(i, k).is_zero()) s += eta(i, k) * v;
    return s;
  };
  for (std::size_t i = 0; i < n && inv.passed; ++i)
    for (std::size_t j = 0; j < n && inv.passed; ++j)
      for (std::size_t k = 0; k < n && inv.passed; ++k) {
        ++inv.instances;
        const Scalar lhs = eta_vec(a.product(i, j), k);
        const Scalar rhs = eta_vec_left(i, a.product(j, k));
        if (lhs != rhs) {
          inv.passed = false;
          inv.witness = Witness{"eta(" + label(i) + "*" + label(j) + ", " + label(k) + ") vs eta(" + label(i) +
                                    ", " + label(j) + "*" + label(k) + ")",
                                lhs.str(), rhs.str()};
        }
      }
  report.checks.push_back(std::move(inv));

  CheckResult nondeg{"nondegeneracy", "Nondegenerate metric", true, 1, std::nullopt};
  const std::size_t r = rank(eta);
  if (r != n) {
    nondeg.passed = false;
    nondeg.witness = Witness{"Gram matrix", "rank " + std::to_string(r), "dim " + std::to_string(n)};
  }
  report.checks.push_back(std::move(nondeg));

  CheckResult grading{"grading", "Degree additivity and metric degree", true, 0, std::nullopt};
  for (const auto& e : a.structure().entries) {
    ++grading.instances;
    if (basis[e.k].degree != basis[e.i].degree + basis[e.j].degree) {
      grading.passed = false;
      grading.witness = Witness{label(e.i) + "*" + label(e.j) + " has a component on " + label(e.k),
                                "deg " + std::to_string(basis[e.k].degree),
                                "deg " + std::to_string(basis[e.i].degree + basis[e.j].degree)};
      break;
    }
  }
  if (grading.passed) {
    std::optional<int> d;
    for (std::size_t i = 0; i < n && grading.passed; ++i)
      for (std::size_t j = 0; j < n && grading.passed; ++j) {
        if (eta(i, j).is_zero()) continue;
        ++grading.instances;
        const int s = basis[i].degree + basis[j].degree;
        if (d && *d != s) {
          grading.passed = false;
          grading.witness = Witness{"eta(" + label(i) + ", " + label(j) + ") != 0", "degree " + std::to_string(s),
                                    "top degree " + std::to_string(*d)};
        }
        d = s;
      }
  }
  report.checks.push_back(std::move(grading));

  CheckResult parity{"parity", "Even unit and additive parity", true, 0, std::nullopt};
  for (const auto& [i, v] : a.unit_sparse().entries()) {
    ++parity.instances;
    if (basis[i].parity % 2 != 0) {
      parity.passed = false;
      parity.witness = Witness{"unit component " + label(i), "odd", "even"};
      break;
    }
  }
  if (parity.passed) {
    for (const auto& e : a.structure().entries) {
      ++parity.instances;
      if ((basis[e.k].parity - basis[e.i].parity - basis[e.j].parity) % 2 != 0) {
        parity.passed = false;
        parity.witness = Witness{label(e.i) + "*" + label(e.j) + " -> " + label(e.k),
                                 "parity " + std::to_string(basis[e.k].parity % 2),
                                 "parity " + std::to_string((basis[e.i].parity + basis[e.j].parity) % 2)};
        break;
      }
    }
  }
  report.checks.push_back(std::move(parity));
  return report;
}

Matrix dual_basis(const FrobeniusAlgebra& a) { return invert(a.metric()); }

Vector copairing(const FrobeniusAlgebra& a) {
  const std::size_t n = a.dim();
  const Matrix dual = dual_basis(a);
  Vector out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = dual(j, i);
  return out;
}

Vector euler_class(const FrobeniusAlgebra& a) {
  const std::size_t n = a.dim();
  const Vector delta = copairing(a);
  Accumulator acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!delta[i * n + j].is_zero()) acc.add_scaled(a.product(i, j), delta[i * n + j]);
  return acc.take().to_dense(n);
}

// ----------------------------------------------------------- tensor powers

TensorIndexer::TensorIndexer(std::size_t base_dim, std::size_t factors) : base_dim_(base_dim), factors_(factors) {
  size_ = 1;
  for (std::size_t f = 0; f < factors; ++f) {
    size_ *= base_dim;
    if (size_ > (1ull << 31)) throw InvalidArgument("tensor power too large to index");
  }
}

std::uint32_t TensorIndexer::encode(std::span<const std::uint32_t> digits) const {
  std::uint32_t idx = 0;
  for (std::uint32_t d : digits) idx = idx * static_cast<std::uint32_t>(base_dim_) + d;
  return idx;
}

void TensorIndexer::decode(std::uint32_t index, std::span<std::uint32_t> digits) const {
  for (std::size_t f = factors_; f-- > 0;) {
    digits[f] = index % static_cast<std::uint32_t>(base_dim_);
    index /= static_cast<std::uint32_t>(base_dim_);
  }
}

std::vector<std::uint32_t> TensorIndexer::decode(std::uint32_t index) const {
  std::vector<std::uint32_t> digits(factors_);
  decode(index, digits);
  return digits;
}

SparseVec outer(std::span<const SparseVec> factors, std::size_t base_dim) {
  SparseVec out = SparseVec::unit(0);
  for (const auto& f : factors) {
    SparseVec next;
    for (const auto& [i, x] : out.entries())
      for (const auto& [j, y] : f.entries())
        next.push_unchecked(static_cast<std::uint32_t>(i * base_dim + j), x * y);
    // Lexicographic order is preserved: outer index major, inner minor.
    out = std::move(next);
  }
  return out;
}

TensorPower::TensorPower(const FrobeniusAlgebra& a, std::size_t m) : a_(&a), index_(a.dim(), m) {}

std::string TensorPower::label(std::uint32_t index) const {
  if (factors() == 0) return "1";
  const auto digits = index_.decode(index);
  std::string out;
  for (std::size_t f = 0; f < digits.size(); ++f) {
    if (f) out += kTensorSeparator;
    out += a_->basis()[digits[f]].label;
  }
  return out;
}

int TensorPower::degree(std::uint32_t index) const {
  int d = 0;
  for (auto digit : index_.decode(index)) d += a_->basis()[digit].degree;
  return d;
}

int TensorPower::parity(std::uint32_t index) const {
  int p = 0;
  for (auto digit : index_.decode(index)) p += a_->basis()[digit].parity;
  return p % 2;
}

SparseVec TensorPower::unit() const {
  std::vector<SparseVec> f(factors(), a_->unit_sparse());
  return outer(f, a_->dim());
}

SparseVec TensorPower::multiply_basis(std::uint32_t x, std::uint32_t y) const {
  const auto dx = index_.decode(x);
  const auto dy = index_.decode(y);
  std::vector<SparseVec> f;
  f.reserve(factors());
  for (std::size_t i = 0; i < factors(); ++i) {
    f.push_back(a_->product(dx[i], dy[i]));
    if (f.back().empty()) return {};
  }
  return outer(f, a_->dim());
}

SparseVec TensorPower::multiply(const SparseVec& u, const SparseVec& v) const {
  Accumulator acc(dim());
  for (const auto& [i, x] : u.entries())
    for (const auto& [j, y] : v.entries()) acc.add_scaled(multiply_basis(i, j), x * y);
  return acc.take();
}

Scalar TensorPower::pair_basis(std::uint32_t x, std::uint32_t y) const {
  const auto dx = index_.decode(x);
  const auto dy = index_.decode(y);
  Scalar s(1);
  for (std::size_t i = 0; i < factors(); ++i) {
    const Scalar& e = a_->metric()(dx[i], dy[i]);
    if (e.is_zero()) return Scalar(0);
    s *= e;
  }
  return s;
}

Scalar TensorPower::pair(const SparseVec& u, const SparseVec& v) const {
  Scalar s;
  for (const auto& [i, x] : u.entries())
    for (const auto& [j, y] : v.entries()) {
      const Scalar p = pair_basis(i, j);
      if (!p.is_zero()) s += x * y * p;
    }
  return s;
}

}  // namespace orbifrob
