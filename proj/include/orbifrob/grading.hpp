#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbifrob/gfrob.hpp"
#include "orbifrob/group.hpp"
#include "orbifrob/scalar.hpp"

namespace orbifrob {

/// Degree shifts per group element.
struct ShiftData {
  Scalar d;                    // top degree of the untwisted sector
  std::vector<Scalar> d_g;     // top degree of A_g
  std::vector<Scalar> s_plus;  // d - d_g
  std::vector<Scalar> s_minus;
  std::vector<Scalar> s;       // (s_plus + s_minus) / 2
};

/// s_minus(g) = sum over nonzero angles theta of (2 theta - 1); angles are
/// rational theta in [0,1) standing for eigenvalues exp(2 pi i theta).
/// Throws InvalidArgument for an angle outside [0,1) or a size mismatch.
ShiftData shifts_from_eigenvalues(const Scalar& d, const std::vector<Scalar>& d_g,
                                  const std::vector<std::vector<Scalar>>& angles);

/// Angles j/k, 0 <= j < k, for each k-cycle of p, repeated copies times.
std::vector<Scalar> permutation_eigenangles(const Permutation& p, int copies);

/// Shifts of an S_n-algebra from the permutation representation with the
/// given multiplicity. Throws InvalidArgument if the group is not S_n or a
/// sector has no well-defined pairing degree.
ShiftData standard_shifts(const GFrobeniusAlgebra& x, int copies = 1);

/// Zero shifts with d_g read off the sector pairings.
ShiftData zero_shifts(const GFrobeniusAlgebra& x);

/// Polynomial in t^{1/2}: exponent key is twice the degree.
struct HalfPoly {
  std::map<int, long long> coeffs;

  void add(int twice_exponent, long long c = 1);
  long long total() const;
  /// e.g. "1 + t + 2t^2 + t^{5/2}"; "0" if empty.
  std::string str() const;
  friend bool operator==(const HalfPoly&, const HalfPoly&) = default;
};

struct PoincareData {
  HalfPoly total;
  std::vector<std::vector<int>> classes;
  std::vector<HalfPoly> per_class;
};

/// Sum of t^{deg + s_g} over a basis of all sectors or of the invariants.
/// Throws InvalidArgument if some deg + s_g is not a multiple of 1/2.
PoincareData shifted_poincare(const GFrobeniusAlgebra& x, const ShiftData& shifts, bool invariants_only);

}  // namespace orbifrob
