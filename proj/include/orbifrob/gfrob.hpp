#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbifrob/frobenius.hpp"
#include "orbifrob/group.hpp"
#include "orbifrob/linalg.hpp"
#include "orbifrob/report.hpp"

namespace orbifrob {

class Cocycle2;
class SuperTwist;

/// Homogeneous element: a coefficient vector in one sector.
struct SectorElement {
  int sector = 0;
  SparseVec coeffs;

  friend bool operator==(const SectorElement&, const SectorElement&) = default;
};

/// G-graded algebra A = sum_g A_g with product, sector pairing, G-action
/// and character.
///
/// Each basis element carries an intrinsic parity; sector g additionally
/// carries super_shift(g) in Z/2, so the total parity of a basis element of
/// A_g is intrinsic + super_shift(g). Twisting by a super twist only moves
/// the shift.
///
/// Storage:
///   product(g, h)  A_g (x) A_h -> A_{gh}, column i * dim(h) + j is e_i e_j;
///   action(g, h)   phi_g restricted to A_h, mapping into A_{g h g^-1};
///   metric(g)      Gram matrix eta(e_i in A_g, e_j in A_{g^-1}).
class GFrobeniusAlgebra {
 public:
  GFrobeniusAlgebra(std::string name, FiniteGroup group, std::vector<std::vector<BasisElement>> sectors);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }

  std::size_t dim(int g) const { return sectors_[static_cast<std::size_t>(g)].size(); }
  std::size_t total_dim() const;
  const std::vector<BasisElement>& basis(int g) const { return sectors_[static_cast<std::size_t>(g)]; }
  int total_parity(int g, std::size_t i) const;
  bool is_super() const;

  SparseMap& product(int g, int h) { return products_[key(g, h)]; }
  const SparseMap& product(int g, int h) const { return products_[key(g, h)]; }
  SparseMap& action(int g, int h) { return actions_[key(g, h)]; }
  const SparseMap& action(int g, int h) const { return actions_[key(g, h)]; }
  Matrix& metric(int g) { return metrics_[static_cast<std::size_t>(g)]; }
  const Matrix& metric(int g) const { return metrics_[static_cast<std::size_t>(g)]; }

  const SparseVec& unit() const noexcept { return unit_; }
  void set_unit(SparseVec u) { unit_ = std::move(u); }
  const Scalar& character(int g) const { return character_[static_cast<std::size_t>(g)]; }
  void set_character(int g, Scalar c) { character_[static_cast<std::size_t>(g)] = std::move(c); }
  int super_shift(int g) const { return super_shift_[static_cast<std::size_t>(g)]; }
  void set_super_shift(int g, int s) { super_shift_[static_cast<std::size_t>(g)] = ((s % 2) + 2) % 2; }

  /// Distinguished generator 1_g of a cyclic sector, if recorded.
  const std::optional<SparseVec>& generator(int g) const { return generators_[static_cast<std::size_t>(g)]; }
  void set_generator(int g, SparseVec v) { generators_[static_cast<std::size_t>(g)] = std::move(v); }

  /// Throws InvalidArgument describing the first shape inconsistency.
  void check_shapes() const;

  SparseVec multiply(int g, const SparseVec& a, int h, const SparseVec& b) const;
  SectorElement multiply(const SectorElement& a, const SectorElement& b) const;
  /// phi_k applied to v in A_h.
  SparseVec act(int k, int h, const SparseVec& v) const;
  /// eta(a, b) for a in A_g, b in A_{g^-1}.
  Scalar pair(int g, const SparseVec& a, const SparseVec& b) const;
  /// Pairing degree d_g: deg e_i + deg e_j over nonzero eta(A_g, A_{g^-1}),
  /// if constant.
  std::optional<int> top_degree(int g) const;

  /// Sector labels and basis labels are ignored; all tables compared exactly.
  bool same_structure(const GFrobeniusAlgebra& other) const;
  friend bool operator==(const GFrobeniusAlgebra&, const GFrobeniusAlgebra&) = default;

 private:
  std::size_t key(int g, int h) const {
    return static_cast<std::size_t>(g) * group_.order() + static_cast<std::size_t>(h);
  }

  std::string name_;
  FiniteGroup group_;
  std::vector<std::vector<BasisElement>> sectors_;
  std::vector<SparseMap> products_;
  std::vector<SparseMap> actions_;
  std::vector<Matrix> metrics_;
  SparseVec unit_;
  std::vector<Scalar> character_;
  std::vector<int> super_shift_;
  std::vector<std::optional<SparseVec>> generators_;
};

std::string format_element(const GFrobeniusAlgebra& x, int g, const SparseVec& v);

enum class SignMode { automatic, even, super };

struct VerifyOptions {
  int jobs = 0;                  // 0: OpenMP default
  double budget = 1e8;           // limit on (sum_g dim A_g)^3
  SignMode mode = SignMode::automatic;
};

/// Exhaustive check of the G-Frobenius axioms.
///
/// Check ids: structure, nondegeneracy, representation, character, a, b
/// (b^σ in super mode), c, d, i, ii, iii, iv (iv^σ in super mode).
/// Throws BudgetExceeded if the instance count estimate is above the budget.
Report verify_axioms(const GFrobeniusAlgebra& x, const VerifyOptions& options = {});

/// Sectorwise graded tensor product with Koszul signs on total parity.
GFrobeniusAlgebra tensor_hat(const GFrobeniusAlgebra& x, const GFrobeniusAlgebra& y);

/// x (x)^ k^{alpha, sigma}[G] realized on the sector spaces of x.
GFrobeniusAlgebra twist(const GFrobeniusAlgebra& x, const Cocycle2& alpha, const SuperTwist& sigma);

/// G-invariant part of a G-Frobenius algebra.
struct InvariantAlgebra {
  std::vector<std::size_t> sector_offset;  // global index of e_0 in A_g
  std::size_t ambient_dim = 0;
  std::vector<std::vector<int>> classes;   // conjugacy classes, element indices
  std::vector<SparseVec> basis;            // vectors over the ambient direct sum
  std::vector<int> class_of;               // per basis vector
  std::vector<int> degree;                 // per basis vector, unshifted
  SparseTensor3 structure;                 // in the invariant basis
  std::vector<Scalar> unit;                // coordinates of the unit
  Matrix metric;                           // restricted pairing
  bool metric_degenerate = false;

  std::size_t dim() const noexcept { return basis.size(); }
  std::vector<std::size_t> class_dims() const;
};

/// Image of P = (1/|G|) sum_g phi_g with the induced product and restricted
/// pairing. Throws InvalidArgument if P is not idempotent.
InvariantAlgebra invariants(const GFrobeniusAlgebra& x);

}  // namespace orbifrob
