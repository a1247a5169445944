#include "orbifrob/cocycle.hpp"

#include "orbifrob/errors.hpp"

namespace orbifrob {

Cocycle2::Cocycle2(FiniteGroup group, std::vector<Scalar> values) : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order() * group_.order()) throw InvalidArgument("cocycle table has wrong size");
}

Cocycle2 Cocycle2::trivial(const FiniteGroup& group) {
  return Cocycle2(group, std::vector<Scalar>(group.order() * group.order(), Scalar(1)));
}

Cocycle2 Cocycle2::inverse() const {
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (const auto& x : values_) {
    if (x.is_zero()) throw InvalidArgument("cocycle has a zero value");
    v.push_back(x.inverse());
  }
  return Cocycle2(group_, std::move(v));
}

Cocycle2 operator*(const Cocycle2& a, const Cocycle2& b) {
  if (!(a.group_.table() == b.group_.table())) throw InvalidArgument("cocycle product: group mismatch");
  std::vector<Scalar> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return Cocycle2(a.group_, std::move(v));
}

SuperTwist::SuperTwist(FiniteGroup group, std::vector<int> parity) : group_(std::move(group)), parity_(std::move(parity)) {
  if (parity_.size() != group_.order()) throw InvalidArgument("super twist table has wrong size");
  for (auto& p : parity_) p = ((p % 2) + 2) % 2;
}

SuperTwist SuperTwist::trivial(const FiniteGroup& group) { return SuperTwist(group, std::vector<int>(group.order(), 0)); }

bool SuperTwist::is_trivial() const {
  for (int p : parity_)
    if (p != 0) return false;
  return true;
}

Report validate(const Cocycle2& alpha) {
  const FiniteGroup& g = alpha.group();
  const int n = static_cast<int>(g.order());
  const int e = g.identity();
  Report report;
  report.subject = "2-cocycle";

  CheckResult nonzero{"nonzero", "Values in k*", true, 0, std::nullopt};
  for (int a = 0; a < n && nonzero.passed; ++a)
    for (int b = 0; b < n && nonzero.passed; ++b) {
      ++nonzero.instances;
      if (alpha(a, b).is_zero()) {
        nonzero.passed = false;
        nonzero.witness = Witness{"alpha(" + g.label(a) + ", " + g.label(b) + ")", "0", "nonzero"};
      }
    }
  report.checks.push_back(std::move(nonzero));

  CheckResult norm{"normalization", "alpha(g,e) = alpha(e,g) = 1", true, 0, std::nullopt};
  for (int a = 0; a < n && norm.passed; ++a) {
    ++norm.instances;
    if (!alpha(a, e).is_one()) {
      norm.passed = false;
      norm.witness = Witness{"alpha(" + g.label(a) + ", e)", alpha(a, e).str(), "1"};
    } else if (!alpha(e, a).is_one()) {
      norm.passed = false;
      norm.witness = Witness{"alpha(e, " + g.label(a) + ")", alpha(e, a).str(), "1"};
    }
  }
  report.checks.push_back(std::move(norm));

  CheckResult law{"cocycle", "alpha(g,h) alpha(gh,k) = alpha(g,hk) alpha(h,k)", true, 0, std::nullopt};
  for (int a = 0; a < n && law.passed; ++a)
    for (int b = 0; b < n && law.passed; ++b)
      for (int c = 0; c < n && law.passed; ++c) {
        ++law.instances;
        const Scalar lhs = alpha(a, b) * alpha(g.mul(a, b), c);
        const Scalar rhs = alpha(a, g.mul(b, c)) * alpha(b, c);
        if (lhs != rhs) {
          law.passed = false;
          law.witness = Witness{"g=" + g.label(a) + ", h=" + g.label(b) + ", k=" + g.label(c), lhs.str(), rhs.str()};
        }
      }
  report.checks.push_back(std::move(law));

  CheckResult sym{"symmetry", "alpha(g,g^-1) = alpha(g^-1,g)", true, 0, std::nullopt};
  for (int a = 0; a < n && sym.passed; ++a) {
    ++sym.instances;
    const int ai = g.inv(a);
    if (alpha(a, ai) != alpha(ai, a)) {
      sym.passed = false;
      sym.witness = Witness{"g=" + g.label(a), alpha(a, ai).str(), alpha(ai, a).str()};
    }
  }
  report.checks.push_back(std::move(sym));
  return report;
}

Report validate(const SuperTwist& sigma) {
  const FiniteGroup& g = sigma.group();
  const int n = static_cast<int>(g.order());
  Report report;
  report.subject = "super twist";
  CheckResult hom{"homomorphism", "sigma(gh) = sigma(g) + sigma(h) mod 2", true, 0, std::nullopt};
  for (int a = 0; a < n && hom.passed; ++a)
    for (int b = 0; b < n && hom.passed; ++b) {
      ++hom.instances;
      const int lhs = sigma(g.mul(a, b));
      const int rhs = (sigma(a) + sigma(b)) % 2;
      if (lhs != rhs) {
        hom.passed = false;
        hom.witness = Witness{"g=" + g.label(a) + ", h=" + g.label(b), std::to_string(lhs), std::to_string(rhs)};
      }
    }
  report.checks.push_back(std::move(hom));
  return report;
}

std::vector<Scalar> epsilon(const Cocycle2& alpha) {
  const FiniteGroup& g = alpha.group();
  const int n = static_cast<int>(g.order());
  std::vector<Scalar> eps(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& den = alpha(g.conj(a, b), a);
      if (den.is_zero()) throw InvalidArgument("epsilon: cocycle has a zero value");
      eps[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = alpha(a, b) / den;
    }
  return eps;
}

GFrobeniusAlgebra twisted_group_ring(const FiniteGroup& group, const Cocycle2& alpha, const SuperTwist& sigma) {
  if (!(alpha.group().table() == group.table()) || !(sigma.group().table() == group.table()))
    throw InvalidArgument("twisted_group_ring: group mismatch");
  if (!validate(alpha).passed()) throw InvalidArgument("twisted_group_ring: alpha is not a normalized 2-cocycle");
  if (!validate(sigma).passed()) throw InvalidArgument("twisted_group_ring: sigma is not a homomorphism to Z/2");
  const int n = static_cast<int>(group.order());
  std::vector<std::vector<BasisElement>> sectors(static_cast<std::size_t>(n), {BasisElement{"1", 0, 0}});
  GFrobeniusAlgebra x("k[G]", group, std::move(sectors));
  const std::vector<Scalar> eps = epsilon(alpha);
  for (int g = 0; g < n; ++g) {
    x.metric(g)(0, 0) = alpha(g, group.inv(g));
    x.set_character(g, sign_power(sigma(g)));
    x.set_super_shift(g, sigma(g));
    x.set_generator(g, SparseVec::unit(0));
    for (int h = 0; h < n; ++h) {
      x.product(g, h).column(0) = SparseVec::unit(0, alpha(g, h));
      x.action(g, h).column(0) = SparseVec::unit(
          0, sign_power(sigma(g) * sigma(h)) *
                 eps[static_cast<std::size_t>(g) * static_cast<std::size_t>(n) + static_cast<std::size_t>(h)]);
    }
  }
  x.set_unit(SparseVec::unit(0));
  return x;
}

int normalized_exponent(const Permutation& s, const Permutation& t) {
  const int twice = degree(s) + degree(t) - degree(s * t);
  if (twice < 0 || twice % 2 != 0)
    throw InvalidArgument("cocycle exponent is not a nonnegative integer for " + s.str() + ", " + t.str());
  return twice / 2;
}

Cocycle2 normalized_sn_cocycle(int n, const Scalar& lambda, int bound) {
  if (lambda.is_zero()) throw InvalidArgument("normalized_sn_cocycle: lambda must be nonzero");
  FiniteGroup g = FiniteGroup::symmetric(n, bound);
  const auto& perms = g.permutations();
  std::vector<Scalar> values(g.order() * g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      values[a * g.order() + b] = lambda.pow(normalized_exponent(perms[a], perms[b]));
  return Cocycle2(std::move(g), std::move(values));
}

SuperTwist sign_supertwist(int n, int bound) {
  FiniteGroup g = FiniteGroup::symmetric(n, bound);
  std::vector<int> parity;
  parity.reserve(g.order());
  for (const auto& p : g.permutations()) parity.push_back(degree(p) % 2);
  return SuperTwist(std::move(g), std::move(parity));
}

}  // namespace orbifrob
