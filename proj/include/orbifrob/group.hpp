#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbifrob {

/// Default upper bound on n for anything that enumerates S_n (8! = 40320).
inline constexpr int kDefaultDegreeBound = 8;

/// Orbit decomposition of {0..n-1}: each block sorted ascending, blocks
/// sorted by their minimal element. This ordering fixes the tensor-factor
/// order of every sector downstream.
class OrbitPartition {
 public:
  OrbitPartition() = default;
  /// Canonicalizes the given blocks; throws unless they partition {0..n-1}.
  OrbitPartition(int n, std::vector<std::vector<int>> blocks);
  static OrbitPartition discrete(int n);

  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  const std::vector<int>& block(std::size_t b) const { return blocks_[b]; }
  /// Index of the block containing point i.
  int block_of(int i) const { return owner_[static_cast<std::size_t>(i)]; }

  /// True if every block of *this lies inside a block of coarser.
  bool refines(const OrbitPartition& coarser) const;

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) { return a.blocks_ == b.blocks_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> owner_;
};

/// Element of S_n in one-line notation on {0..n-1}.
///
/// Composition convention: (p * q)(i) = p(q(i)), i.e. q is applied first.
/// Every cocycle exponent and every sector-label convention in the library
/// is stated with respect to this rule.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Transposition of the 0-based points a and b.
  static Permutation transposition(int n, int a, int b);
  /// Parses 1-based cycle notation, e.g. "(1 2)(3 4)", "e" or "()".
  static Permutation parse(std::string_view text, int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// 1-based cycle notation with fixed points omitted; "e" for the identity.
  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

/// p * q with (p * q)(i) = p(q(i)). Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g h g^{-1}.
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Orbits of <p> on points, fixed points as singleton blocks.
OrbitPartition cycles(const Permutation& p);
/// Number of cycles l(p), fixed points included.
int cycle_count(const Permutation& p);
/// Minimal transposition length |p| = n - l(p).
int degree(const Permutation& p);
/// Orbits of the group generated by gens. n is required when gens is empty.
OrbitPartition group_orbits(std::span<const Permutation> gens, int n = -1);
/// |pq| == |p| + |q|.
bool is_transversal(const Permutation& p, const Permutation& q);
/// (-1)^{|p|}.
int sign(const Permutation& p);
/// Cycle lengths sorted descending, fixed points included.
std::vector<int> cycle_type(const Permutation& p);

/// All n! permutations in lexicographic order of one-line notation; the
/// identity comes first.
std::vector<Permutation> enumerate(int n, int bound = kDefaultDegreeBound);
/// Position of p in enumerate(p.degree()).
std::size_t lex_rank(const Permutation& p);
std::vector<Permutation> transpositions(int n);

struct ConjugacyClass {
  std::vector<int> cycle_type;
  std::vector<Permutation> members;
};
/// Classes of S_n ordered by first appearance in enumerate(n).
std::vector<ConjugacyClass> conjugacy_classes(int n, int bound = kDefaultDegreeBound);

/// Finite group given by a validated multiplication table.
class FiniteGroup {
 public:
  /// Validates associativity, a unique identity and two-sided inverses.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);
  /// S_n with elements in enumerate(n) order and cycle-notation labels.
  static FiniteGroup symmetric(int n, int bound = kDefaultDegreeBound);

  std::size_t order() const noexcept { return labels_.size(); }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
  int commutator(int g, int h) const { return mul(mul(g, h), mul(inv(g), inv(h))); }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Index of the element with the given label; -1 if absent.
  int find(std::string_view label) const;
  std::vector<std::vector<int>> table() const;

  /// S_n degree when built by symmetric(), 0 otherwise.
  int symmetric_degree() const noexcept { return sym_n_; }
  /// Underlying permutations when built by symmetric().
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }
  /// Index of a permutation (symmetric groups only).
  int index_of(const Permutation& p) const;

  /// Conjugacy classes as element-index lists, ordered by smallest member.
  std::vector<std::vector<int>> conjugacy_classes() const;
  std::vector<int> centralizer(int g) const;
  bool commute(int g, int h) const { return mul(g, h) == mul(h, g); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_ && a.labels_ == b.labels_;
  }

 private:
  FiniteGroup() = default;
  void validate_and_index();

  std::vector<std::string> labels_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  int sym_n_ = 0;
  std::vector<Permutation> perms_;
};

}  // namespace orbifrob
