#include "orbifrob/grading.hpp"

#include <sstream>

#include "orbifrob/errors.hpp"

namespace orbifrob {

ShiftData shifts_from_eigenvalues(const Scalar& d, const std::vector<Scalar>& d_g,
                                  const std::vector<std::vector<Scalar>>& angles) {
  if (angles.size() != d_g.size()) throw InvalidArgument("shifts: one angle multiset per group element expected");
  ShiftData out;
  out.d = d;
  out.d_g = d_g;
  const Scalar half(1, 2);
  for (std::size_t g = 0; g < d_g.size(); ++g) {
    Scalar minus;
    for (const auto& theta : angles[g]) {
      if (theta < Scalar(0) || theta >= Scalar(1)) throw InvalidArgument("eigen-angle " + theta.str() + " not in [0,1)");
      if (!theta.is_zero()) minus += Scalar(2) * theta - Scalar(1);
    }
    out.s_plus.push_back(d - d_g[g]);
    out.s_minus.push_back(minus);
    out.s.push_back(half * (out.s_plus.back() + minus));
  }
  return out;
}

std::vector<Scalar> permutation_eigenangles(const Permutation& p, int copies) {
  if (copies < 1) throw InvalidArgument("copies must be positive");
  std::vector<Scalar> out;
  const OrbitPartition orbits = cycles(p);
  for (int c = 0; c < copies; ++c)
    for (const auto& block : orbits.blocks()) {
      const auto k = static_cast<std::int64_t>(block.size());
      for (std::int64_t j = 0; j < k; ++j) out.emplace_back(j, k);
    }
  return out;
}

namespace {

std::vector<Scalar> sector_degrees(const GFrobeniusAlgebra& x) {
  std::vector<Scalar> d_g;
  for (std::size_t g = 0; g < x.order(); ++g) {
    const auto d = x.top_degree(static_cast<int>(g));
    if (!d) throw InvalidArgument("sector " + x.group().label(static_cast<int>(g)) + " has no pairing degree");
    d_g.emplace_back(*d);
  }
  return d_g;
}

}  // namespace

ShiftData standard_shifts(const GFrobeniusAlgebra& x, int copies) {
  if (x.group().symmetric_degree() == 0) throw InvalidArgument("standard shifts need an S_n-algebra");
  const auto d_g = sector_degrees(x);
  std::vector<std::vector<Scalar>> angles;
  for (const auto& p : x.group().permutations()) angles.push_back(permutation_eigenangles(p, copies));
  return shifts_from_eigenvalues(d_g[static_cast<std::size_t>(x.group().identity())], d_g, angles);
}

ShiftData zero_shifts(const GFrobeniusAlgebra& x) {
  const auto d_g = sector_degrees(x);
  ShiftData out;
  out.d = d_g[static_cast<std::size_t>(x.group().identity())];
  out.d_g = d_g;
  out.s_plus.assign(d_g.size(), Scalar(0));
  out.s_minus.assign(d_g.size(), Scalar(0));
  out.s.assign(d_g.size(), Scalar(0));
  return out;
}

void HalfPoly::add(int twice_exponent, long long c) {
  auto& v = coeffs[twice_exponent];
  v += c;
  if (v == 0) coeffs.erase(twice_exponent);
}

long long HalfPoly::total() const {
  long long s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return s;
}

std::string HalfPoly::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "t";
    if (e % 2 != 0) os << "^{" << e << "/2}";
    else if (e != 2) os << "^" << e / 2;
  }
  return os.str();
}

namespace {

int twice_exponent(int degree, const Scalar& shift) {
  const Scalar twice = Scalar(2) * (Scalar(degree) + shift);
  if (!twice.is_integer()) throw InvalidArgument("shifted degree " + (twice / Scalar(2)).str() + " is not in Z/2");
  return static_cast<int>(twice.to_mpq().get_num().get_si());
}

}  // namespace

PoincareData shifted_poincare(const GFrobeniusAlgebra& x, const ShiftData& shifts, bool invariants_only) {
  if (shifts.s.size() != x.order()) throw InvalidArgument("shift data does not match the group");
  PoincareData out;
  out.classes = x.group().conjugacy_classes();
  out.per_class.resize(out.classes.size());
  if (invariants_only) {
    const InvariantAlgebra inv = invariants(x);
    for (std::size_t b = 0; b < inv.dim(); ++b) {
      const auto c = static_cast<std::size_t>(inv.class_of[b]);
      const int rep = out.classes[c].front();
      const int e = twice_exponent(inv.degree[b], shifts.s[static_cast<std::size_t>(rep)]);
      out.per_class[c].add(e);
      out.total.add(e);
    }
    return out;
  }
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (int g : out.classes[c])
      for (const auto& b : x.basis(g)) {
        const int e = twice_exponent(b.degree, shifts.s[static_cast<std::size_t>(g)]);
        out.per_class[c].add(e);
        out.total.add(e);
      }
  return out;
}

}  // namespace orbifrob
