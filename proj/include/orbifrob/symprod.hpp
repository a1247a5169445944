#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "orbifrob/frobenius.hpp"
#include "orbifrob/gfrob.hpp"
#include "orbifrob/group.hpp"
#include "orbifrob/linalg.hpp"
#include "orbifrob/report.hpp"

namespace orbifrob {

struct SymprodOptions {
  int bound = kDefaultDegreeBound;
  int jobs = 0;         // 0: OpenMP default
  double budget = 2e7;  // limit on (sum_s dim A_s)^2
};

/// Second quantization of a commutative, even Frobenius algebra A for S_n.
///
/// Sector s is A^{(x) l(s)}, one tensor factor per cycle of s in canonical
/// orbit order. All maps between sectors are built from three primitives on
/// orbit partitions P finer than Q:
///   restrict     r: A^{(x)P} -> A^{(x)Q}, multiply the factors inside each Q-block;
///   pushforward  its metric adjoint A^{(x)Q} -> A^{(x)P};
///   section      A^{(x)Q} -> A^{(x)P}, factor at the first P-block, units elsewhere.
class SymmetricProduct {
 public:
  /// Throws InvalidArgument unless the base passes verify() and is
  /// commutative with all parities even.
  SymmetricProduct(FrobeniusAlgebra base, int n, int bound = kDefaultDegreeBound);

  const FrobeniusAlgebra& base() const noexcept { return *base_; }
  int n() const noexcept { return n_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const Permutation& element(int g) const { return group_.permutations()[static_cast<std::size_t>(g)]; }
  int index_of(const Permutation& p) const { return group_.index_of(p); }
  const OrbitPartition& orbits(int g) const { return orbits_[static_cast<std::size_t>(g)]; }
  std::size_t sector_dim(int g) const { return power(orbits(g).size()).dim(); }
  /// A^{(x)m} for 0 <= m <= n.
  const TensorPower& power(std::size_t m) const { return powers_[m]; }

  SparseVec restrict(const OrbitPartition& fine, const OrbitPartition& coarse, const SparseVec& v) const;
  SparseVec pushforward(const OrbitPartition& fine, const OrbitPartition& coarse, const SparseVec& v) const;
  SparseVec section(const OrbitPartition& fine, const OrbitPartition& coarse, const SparseVec& v) const;

  /// Delta_m(e_k): the adjoint of the m-fold product, on A^{(x)m}.
  const SparseVec& coproduct(std::size_t m, std::size_t k) const { return coproducts_[m][k]; }
  /// e^k in A, e^0 = 1.
  const SparseVec& euler_power(std::size_t k) const;
  /// Product over the orbits B of <s, t> of e^{g(B)}, on A^{(x) orbits<s,t>}.
  SparseVec gamma_tilde(int g, int h) const;

  SparseVec multiply_pushforward(int g, const SparseVec& a, int h, const SparseVec& b) const;
  /// Chain formula with the greedy minimal word for element(h).
  SparseVec multiply_chain(int g, const SparseVec& a, int h, const SparseVec& b) const;
  /// Chain formula with a given minimal transposition word for element(h).
  SparseVec multiply_chain(int g, const SparseVec& a, int h, const SparseVec& b,
                           std::span<const Permutation> word) const;
  /// Product over the contraction steps of the pushforwards of 1 along the
  /// word's transpositions, in A_e.
  SparseVec chain_element(int g, std::span<const Permutation> word) const;

  /// Full G-Frobenius tables; sector pairs are computed in parallel with
  /// per-pair caches.
  GFrobeniusAlgebra build(const SymprodOptions& options = {}) const;
  /// Same tables, one multiply_pushforward call per basis pair, serial.
  GFrobeniusAlgebra build_reference(const SymprodOptions& options = {}) const;

  /// Estimated build cost (sum_s dim A_s)^2.
  double build_cost() const;

 private:
  GFrobeniusAlgebra skeleton() const;
  void fill_product_pair(GFrobeniusAlgebra& x, int g, int h) const;
  void check_budget(const SymprodOptions& options) const;

  std::shared_ptr<const FrobeniusAlgebra> base_;
  int n_;
  FiniteGroup group_;
  std::vector<OrbitPartition> orbits_;
  std::vector<TensorPower> powers_;
  std::vector<std::vector<SparseVec>> coproducts_;
  std::vector<SparseVec> euler_powers_;
};

/// r for the orbit partitions of the groups generated by from and to.
SparseVec restriction(const SymmetricProduct& sp, std::span<const Permutation> from, std::span<const Permutation> to,
                      const SparseVec& v);
/// Metric adjoint of restriction(sp, from, to, .).
SparseVec pushforward(const SymmetricProduct& sp, std::span<const Permutation> from, std::span<const Permutation> to,
                      const SparseVec& v);

/// g(B) = (|B| + 2 - #s-orbits - #t-orbits - #st-orbits in B) / 2 for an
/// orbit B of <s, t>. Throws InvalidArgument if not a nonnegative integer.
int obstruction_exponent(const Permutation& s, const Permutation& t, std::span<const int> block);

/// Greedy minimal word p = t_1 ... t_m: at each step take the smallest
/// moved point a of the remainder c, t = (a c(a)), c <- t c.
std::vector<Permutation> minimal_transposition_word(const Permutation& p);
/// Every minimal transposition word for p (at most max_words).
std::vector<std::vector<Permutation>> minimal_transposition_words(const Permutation& p, std::size_t max_words = 4096);
/// Steps i (0-based) with |s t_1 ... t_i| = |s t_1 ... t_{i-1}| - 1.
std::vector<std::size_t> contraction_steps(const Permutation& s, std::span<const Permutation> word);

struct GammaData {
  OrbitPartition intersection;  // orbits of <s, t>
  SparseVec chain;              // gamma_{s,t} in A_e
  SparseVec restricted;         // r_{st}(gamma_{s,t}) in A_{st}
  SparseVec tilde;              // in A^{(x) intersection}
  SparseVec perp;               // pushforward of 1 into A_{st}
  SparseVec bar;                // section of tilde into A_{st}
};
GammaData gamma_data(const SymmetricProduct& sp, int g, int h);

/// Basis of I_P = ker(r: A_e -> A^{(x)P}).
std::vector<SparseVec> restriction_kernel(const SymmetricProduct& sp, const OrbitPartition& target);

/// phi_k on A_e: the factor at point i moves to point k(i).
SparseVec act_on_untwisted(const SymmetricProduct& sp, int k, const SparseVec& v);

/// Checks the compatibility equations for the chain cocycle gamma and
/// phi_{s,t} = (-1)^{p |s| |t|}, modulo I_{st}:
///   grpcompat  phi_{g,h} gamma_{ghg^-1, g} = gamma_{g,h}
///   algaut     phi_{k,g} phi_{k,h} gamma_{kgk^-1, khk^-1} = phi_k(gamma_{g,h}) phi_{k,gh}
/// With super_signs, grpcompat carries the factor (-1)^{|g||h|} from
/// super-commutativity with the parity |s| mod 2.
Report check_compatible_pair(const SymmetricProduct& sp, int p, bool super_signs);

/// Twist by normalized_sn_cocycle(n, -1).
GFrobeniusAlgebra hilbert_twist(const GFrobeniusAlgebra& x);
/// Twist by normalized_sn_cocycle(n, lambda). Throws if lambda = 0.
GFrobeniusAlgebra qw_twist(const GFrobeniusAlgebra& x, const Scalar& lambda);

}  // namespace orbifrob
