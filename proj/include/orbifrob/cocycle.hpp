#pragma once

#include <vector>

#include "orbifrob/gfrob.hpp"
#include "orbifrob/group.hpp"
#include "orbifrob/report.hpp"
#include "orbifrob/scalar.hpp"

namespace orbifrob {

/// Function alpha: G x G -> k stored as a full table. Not validated on
/// construction; see validate().
class Cocycle2 {
 public:
  Cocycle2(FiniteGroup group, std::vector<Scalar> values);
  static Cocycle2 trivial(const FiniteGroup& group);

  const FiniteGroup& group() const noexcept { return group_; }
  const Scalar& operator()(int g, int h) const { return values_[key(g, h)]; }
  void set(int g, int h, Scalar v) { values_[key(g, h)] = std::move(v); }
  const std::vector<Scalar>& values() const noexcept { return values_; }

  /// Pointwise inverse.
  Cocycle2 inverse() const;
  /// Pointwise product.
  friend Cocycle2 operator*(const Cocycle2& a, const Cocycle2& b);
  friend bool operator==(const Cocycle2& a, const Cocycle2& b) = default;

 private:
  std::size_t key(int g, int h) const {
    return static_cast<std::size_t>(g) * group_.order() + static_cast<std::size_t>(h);
  }
  FiniteGroup group_;
  std::vector<Scalar> values_;
};

/// Homomorphism sigma: G -> Z/2 stored as a table of 0/1.
class SuperTwist {
 public:
  SuperTwist(FiniteGroup group, std::vector<int> parity);
  static SuperTwist trivial(const FiniteGroup& group);

  const FiniteGroup& group() const noexcept { return group_; }
  int operator()(int g) const { return parity_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& values() const noexcept { return parity_; }
  bool is_trivial() const;

  friend bool operator==(const SuperTwist& a, const SuperTwist& b) = default;

 private:
  FiniteGroup group_;
  std::vector<int> parity_;
};

/// Checks nonvanishing, normalization alpha(g,e) = alpha(e,g) = 1, the
/// cocycle law and alpha(g,g^-1) = alpha(g^-1,g), exhaustively.
Report validate(const Cocycle2& alpha);
Report validate(const SuperTwist& sigma);

/// epsilon(g,h) = alpha(g,h) / alpha(g h g^-1, g), as a |G| x |G| table.
std::vector<Scalar> epsilon(const Cocycle2& alpha);

/// k^{alpha,sigma}[G]: one-dimensional sectors spanned by 1_g.
/// Throws InvalidArgument if alpha or sigma fails validation.
GFrobeniusAlgebra twisted_group_ring(const FiniteGroup& group, const Cocycle2& alpha, const SuperTwist& sigma);

/// alpha(s, t) = lambda^{(|s| + |t| - |st|) / 2} on S_n.
Cocycle2 normalized_sn_cocycle(int n, const Scalar& lambda, int bound = kDefaultDegreeBound);
/// Exponent (|s| + |t| - |st|) / 2; throws if it is not a nonnegative integer.
int normalized_exponent(const Permutation& s, const Permutation& t);

/// s -> |s| mod 2.
SuperTwist sign_supertwist(int n, int bound = kDefaultDegreeBound);

}  // namespace orbifrob
