#include "orbifrob/symprod.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <functional>

#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"

namespace orbifrob {

namespace {

/// Coarse block containing each fine block; throws unless fine refines coarse.
std::vector<int> nest(const OrbitPartition& fine, const OrbitPartition& coarse) {
  if (fine.degree() != coarse.degree()) throw InvalidArgument("orbit partitions have different degrees");
  std::vector<int> owner(fine.size());
  for (std::size_t b = 0; b < fine.size(); ++b) {
    const auto& block = fine.block(b);
    const int c = coarse.block_of(block.front());
    for (int p : block)
      if (coarse.block_of(p) != c) throw InvalidArgument("orbit partitions are not nested");
    owner[b] = c;
  }
  return owner;
}

std::vector<std::vector<std::size_t>> members(const std::vector<int>& owner, std::size_t coarse_size) {
  std::vector<std::vector<std::size_t>> out(coarse_size);
  for (std::size_t b = 0; b < owner.size(); ++b) out[static_cast<std::size_t>(owner[b])].push_back(b);
  return out;
}

}  // namespace

SymmetricProduct::SymmetricProduct(FrobeniusAlgebra base, int n, int bound)
    : base_(std::make_shared<const FrobeniusAlgebra>(std::move(base))), n_(n),
      group_(FiniteGroup::symmetric(n, bound)) {
  if (!verify(*base_).passed()) throw InvalidArgument("base algebra '" + base_->name() + "' fails the Frobenius laws");
  if (!base_->is_even()) throw InvalidArgument("base algebra has odd basis elements; only even bases are supported");
  if (!base_->is_commutative()) throw InvalidArgument("base algebra is not commutative");

  for (const auto& p : group_.permutations()) orbits_.push_back(cycles(p));
  for (int m = 0; m <= n; ++m) powers_.emplace_back(*base_, static_cast<std::size_t>(m));

  const std::size_t d = base_->dim();
  const Matrix dual = dual_basis(*base_);
  std::vector<SparseVec> dual_vec(d);
  for (std::size_t j = 0; j < d; ++j) {
    Vector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = dual(i, j);
    dual_vec[j] = SparseVec::from_dense(col);
  }
  coproducts_.resize(static_cast<std::size_t>(n) + 1);
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m) {
    const TensorPower& pm = powers_[m];
    std::vector<Accumulator> acc;
    for (std::size_t k = 0; k < d; ++k) acc.emplace_back(pm.dim());
    std::vector<std::uint32_t> digits(m);
    std::vector<SparseVec> parts(m);
    for (std::uint32_t j = 0; j < pm.dim(); ++j) {
      pm.indexer().decode(j, digits);
      SparseVec prod = SparseVec::unit(digits[0]);
      for (std::size_t t = 1; t < m && !prod.empty(); ++t) prod = base_->multiply(prod, SparseVec::unit(digits[t]));
      if (prod.empty()) continue;
      for (std::size_t t = 0; t < m; ++t) parts[t] = dual_vec[digits[t]];
      const SparseVec dual_tensor = outer(parts, d);
      for (std::size_t k = 0; k < d; ++k) {
        Scalar c;
        for (const auto& [l, v] : prod.entries())
          if (!base_->metric()(k, l).is_zero()) c += v * base_->metric()(k, l);
        if (!c.is_zero()) acc[k].add_scaled(dual_tensor, c);
      }
    }
    for (std::size_t k = 0; k < d; ++k) coproducts_[m].push_back(acc[k].take());
  }

  const SparseVec e = SparseVec::from_dense(euler_class(*base_));
  euler_powers_.push_back(base_->unit_sparse());
  for (int k = 1; k <= n + 1; ++k) euler_powers_.push_back(base_->multiply(euler_powers_.back(), e));
}

const SparseVec& SymmetricProduct::euler_power(std::size_t k) const {
  if (k >= euler_powers_.size()) throw InvalidArgument("euler_power: exponent out of range");
  return euler_powers_[k];
}

SparseVec SymmetricProduct::restrict(const OrbitPartition& fine, const OrbitPartition& coarse,
                                     const SparseVec& v) const {
  const auto owner = nest(fine, coarse);
  const TensorPower& pf = power(fine.size());
  const TensorPower& pc = power(coarse.size());
  Accumulator acc(pc.dim());
  std::vector<std::uint32_t> digits(fine.size());
  std::vector<SparseVec> factors(coarse.size());
  std::vector<char> seen(coarse.size());
  for (const auto& [k, c] : v.entries()) {
    pf.indexer().decode(k, digits);
    std::fill(seen.begin(), seen.end(), 0);
    bool zero = false;
    for (std::size_t b = 0; b < fine.size() && !zero; ++b) {
      const auto cb = static_cast<std::size_t>(owner[b]);
      if (!seen[cb]) {
        factors[cb] = SparseVec::unit(digits[b]);
        seen[cb] = 1;
      } else {
        factors[cb] = base_->multiply(factors[cb], SparseVec::unit(digits[b]));
        zero = factors[cb].empty();
      }
    }
    if (zero) continue;
    acc.add_scaled(outer(factors, base_->dim()), c);
  }
  return acc.take();
}

SparseVec SymmetricProduct::pushforward(const OrbitPartition& fine, const OrbitPartition& coarse,
                                        const SparseVec& v) const {
  const auto owner = nest(fine, coarse);
  const auto groups = members(owner, coarse.size());
  const TensorPower& pf = power(fine.size());
  const TensorPower& pc = power(coarse.size());
  Accumulator acc(pf.dim());
  std::vector<std::uint32_t> cd(coarse.size());
  std::vector<std::uint32_t> fd(fine.size());
  std::vector<std::uint32_t> sub(fine.size());
  std::vector<const SparseVec*> parts(coarse.size());
  for (const auto& [k, c] : v.entries()) {
    pc.indexer().decode(k, cd);
    bool zero = false;
    for (std::size_t b = 0; b < coarse.size(); ++b) {
      parts[b] = &coproduct(groups[b].size(), cd[b]);
      zero = zero || parts[b]->empty();
    }
    if (zero) continue;
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t b, const Scalar& coef) {
      if (b == coarse.size()) {
        acc.add(pf.indexer().encode(fd), coef);
        return;
      }
      const auto& grp = groups[b];
      const TensorIndexer& idx = power(grp.size()).indexer();
      for (const auto& [j, x] : parts[b]->entries()) {
        idx.decode(j, std::span<std::uint32_t>(sub.data(), grp.size()));
        for (std::size_t t = 0; t < grp.size(); ++t) fd[grp[t]] = sub[t];
        rec(b + 1, coef * x);
      }
    };
    rec(0, c);
  }
  return acc.take();
}

SparseVec SymmetricProduct::section(const OrbitPartition& fine, const OrbitPartition& coarse,
                                    const SparseVec& v) const {
  const auto owner = nest(fine, coarse);
  const TensorPower& pc = power(coarse.size());
  Accumulator acc(power(fine.size()).dim());
  std::vector<std::uint32_t> cd(coarse.size());
  std::vector<SparseVec> factors(fine.size());
  for (const auto& [k, c] : v.entries()) {
    pc.indexer().decode(k, cd);
    std::vector<char> placed(coarse.size(), 0);
    for (std::size_t b = 0; b < fine.size(); ++b) {
      const auto cb = static_cast<std::size_t>(owner[b]);
      if (!placed[cb]) {
        factors[b] = SparseVec::unit(cd[cb]);
        placed[cb] = 1;
      } else {
        factors[b] = base_->unit_sparse();
      }
    }
    acc.add_scaled(outer(factors, base_->dim()), c);
  }
  return acc.take();
}

SparseVec SymmetricProduct::gamma_tilde(int g, int h) const {
  const std::array<Permutation, 2> gens{element(g), element(h)};
  const OrbitPartition both = group_orbits(gens, n_);
  std::vector<SparseVec> factors;
  for (const auto& block : both.blocks()) {
    const int k = obstruction_exponent(gens[0], gens[1], block);
    factors.push_back(euler_power(static_cast<std::size_t>(k)));
  }
  return outer(factors, base_->dim());
}

SparseVec SymmetricProduct::multiply_pushforward(int g, const SparseVec& a, int h, const SparseVec& b) const {
  const std::array<Permutation, 2> gens{element(g), element(h)};
  const OrbitPartition both = group_orbits(gens, n_);
  const TensorPower& ph = power(both.size());
  const SparseVec ra = restrict(orbits(g), both, a);
  const SparseVec rb = restrict(orbits(h), both, b);
  const SparseVec prod = ph.multiply(ph.multiply(ra, rb), gamma_tilde(g, h));
  return pushforward(orbits(group_.mul(g, h)), both, prod);
}

SparseVec SymmetricProduct::chain_element(int g, std::span<const Permutation> word) const {
  const OrbitPartition discrete = OrbitPartition::discrete(n_);
  const TensorPower& pn = power(static_cast<std::size_t>(n_));
  SparseVec result = pn.unit();
  Permutation cur = element(g);
  for (const auto& t : word) {
    Permutation next = cur * t;
    if (degree(next) == degree(cur) - 1) {
      const OrbitPartition pair = cycles(t);
      result = pn.multiply(result, pushforward(discrete, pair, power(pair.size()).unit()));
    }
    cur = std::move(next);
  }
  return result;
}

SparseVec SymmetricProduct::multiply_chain(int g, const SparseVec& a, int h, const SparseVec& b,
                                           std::span<const Permutation> word) const {
  const Permutation& t = element(h);
  Permutation prod = Permutation::identity(n_);
  for (const auto& w : word) {
    if (w.degree() != n_ || degree(w) != 1) throw InvalidArgument("word letters must be transpositions in S_n");
    prod = prod * w;
  }
  if (prod != t || static_cast<int>(word.size()) != degree(t))
    throw InvalidArgument("not a minimal transposition word for " + t.str());
  const OrbitPartition discrete = OrbitPartition::discrete(n_);
  const TensorPower& pn = power(static_cast<std::size_t>(n_));
  SparseVec x = pn.multiply(section(discrete, orbits(g), a), section(discrete, orbits(h), b));
  x = pn.multiply(x, chain_element(g, word));
  return restrict(discrete, orbits(group_.mul(g, h)), x);
}

SparseVec SymmetricProduct::multiply_chain(int g, const SparseVec& a, int h, const SparseVec& b) const {
  const auto word = minimal_transposition_word(element(h));
  return multiply_chain(g, a, h, b, word);
}

double SymmetricProduct::build_cost() const {
  double total = 0;
  for (std::size_t g = 0; g < group_.order(); ++g) total += static_cast<double>(sector_dim(static_cast<int>(g)));
  return total * total;
}

void SymmetricProduct::check_budget(const SymprodOptions& options) const {
  const double cost = build_cost();
  if (cost > options.budget) throw BudgetExceeded("symmetric product build", cost, options.budget);
}

GFrobeniusAlgebra SymmetricProduct::skeleton() const {
  const int order = static_cast<int>(group_.order());
  std::vector<std::vector<BasisElement>> sectors(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g) {
    const TensorPower& p = power(orbits(g).size());
    for (std::uint32_t i = 0; i < p.dim(); ++i)
      sectors[static_cast<std::size_t>(g)].push_back(BasisElement{p.label(i), p.degree(i), 0});
  }
  GFrobeniusAlgebra x("Sym" + std::to_string(n_) + "(" + base_->name() + ")", group_, std::move(sectors));
  for (int g = 0; g < order; ++g) {
    const TensorPower& p = power(orbits(g).size());
    x.set_generator(g, p.unit());
    // Orbits of g and g^-1 coincide, so the pairing is the tensor metric.
    Matrix& m = x.metric(g);
    for (std::uint32_t i = 0; i < p.dim(); ++i)
      for (std::uint32_t j = 0; j < p.dim(); ++j) m(i, j) = p.pair_basis(i, j);

    for (int h = 0; h < order; ++h) {
      const int c = group_.conj(g, h);
      const OrbitPartition& src = orbits(h);
      const OrbitPartition& dst = orbits(c);
      std::vector<std::size_t> target(src.size());
      for (std::size_t b = 0; b < src.size(); ++b)
        target[b] = static_cast<std::size_t>(dst.block_of(element(g)(src.block(b).front())));
      const TensorPower& ps = power(src.size());
      std::vector<std::uint32_t> digits(src.size()), moved(src.size());
      SparseMap& a = x.action(g, h);
      for (std::uint32_t i = 0; i < ps.dim(); ++i) {
        ps.indexer().decode(i, digits);
        for (std::size_t b = 0; b < src.size(); ++b) moved[target[b]] = digits[b];
        a.column(i) = SparseVec::unit(ps.indexer().encode(moved));
      }
    }
  }
  x.set_unit(power(static_cast<std::size_t>(n_)).unit());
  return x;
}

void SymmetricProduct::fill_product_pair(GFrobeniusAlgebra& x, int g, int h) const {
  const std::array<Permutation, 2> gens{element(g), element(h)};
  const OrbitPartition both = group_orbits(gens, n_);
  const TensorPower& ph = power(both.size());
  const int gh = group_.mul(g, h);
  const std::size_t dg = sector_dim(g), dh = sector_dim(h), dgh = sector_dim(gh);
  const SparseVec gt = gamma_tilde(g, h);

  std::vector<SparseVec> ra(dg), rb(dh);
  for (std::size_t i = 0; i < dg; ++i) ra[i] = restrict(orbits(g), both, SparseVec::unit(static_cast<std::uint32_t>(i)));
  for (std::size_t j = 0; j < dh; ++j)
    rb[j] = ph.multiply(restrict(orbits(h), both, SparseVec::unit(static_cast<std::uint32_t>(j))), gt);

  std::vector<std::optional<SparseVec>> push(ph.dim());
  SparseMap& p = x.product(g, h);
  Accumulator acc(dgh);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j < dh; ++j) {
      if (ra[i].empty() || rb[j].empty()) continue;
      const SparseVec prod = ph.multiply(ra[i], rb[j]);
      for (const auto& [k, c] : prod.entries()) {
        if (!push[k]) push[k] = pushforward(orbits(gh), both, SparseVec::unit(k));
        acc.add_scaled(*push[k], c);
      }
      p.column(i * dh + j) = acc.take();
    }
}

GFrobeniusAlgebra SymmetricProduct::build(const SymprodOptions& options) const {
  check_budget(options);
  GFrobeniusAlgebra x = skeleton();
  const long long order = static_cast<long long>(group_.order());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (long long t = 0; t < order * order; ++t)
    fill_product_pair(x, static_cast<int>(t / order), static_cast<int>(t % order));
  return x;
}

GFrobeniusAlgebra SymmetricProduct::build_reference(const SymprodOptions& options) const {
  check_budget(options);
  GFrobeniusAlgebra x = skeleton();
  const int order = static_cast<int>(group_.order());
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      SparseMap& p = x.product(g, h);
      const std::size_t dh = sector_dim(h);
      for (std::size_t i = 0; i < sector_dim(g); ++i)
        for (std::size_t j = 0; j < dh; ++j)
          p.column(i * dh + j) = multiply_pushforward(g, SparseVec::unit(static_cast<std::uint32_t>(i)), h,
                                                      SparseVec::unit(static_cast<std::uint32_t>(j)));
    }
  return x;
}

// ------------------------------------------------------------ free functions

SparseVec restriction(const SymmetricProduct& sp, std::span<const Permutation> from, std::span<const Permutation> to,
                      const SparseVec& v) {
  return sp.restrict(group_orbits(from, sp.n()), group_orbits(to, sp.n()), v);
}

SparseVec pushforward(const SymmetricProduct& sp, std::span<const Permutation> from, std::span<const Permutation> to,
                      const SparseVec& v) {
  return sp.pushforward(group_orbits(from, sp.n()), group_orbits(to, sp.n()), v);
}

int obstruction_exponent(const Permutation& s, const Permutation& t, std::span<const int> block) {
  const Permutation st = s * t;
  auto count = [&](const Permutation& p) {
    const OrbitPartition c = cycles(p);
    std::vector<int> seen;
    for (int x : block) seen.push_back(c.block_of(x));
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
  };
  const int twice = static_cast<int>(block.size()) + 2 - count(s) - count(t) - count(st);
  if (twice < 0 || twice % 2 != 0)
    throw InvalidArgument("obstruction exponent is not a nonnegative integer for " + s.str() + ", " + t.str());
  return twice / 2;
}

std::vector<Permutation> minimal_transposition_word(const Permutation& p) {
  const int n = p.degree();
  std::vector<Permutation> word;
  Permutation cur = p;
  while (!cur.is_identity()) {
    int a = 0;
    while (cur(a) == a) ++a;
    Permutation t = Permutation::transposition(n, a, cur(a));
    cur = t * cur;
    word.push_back(std::move(t));
  }
  return word;
}

std::vector<std::vector<Permutation>> minimal_transposition_words(const Permutation& p, std::size_t max_words) {
  const int n = p.degree();
  std::vector<std::vector<Permutation>> out;
  std::vector<Permutation> word;
  std::function<void(const Permutation&)> rec = [&](const Permutation& cur) {
    if (out.size() >= max_words) return;
    if (cur.is_identity()) {
      out.push_back(word);
      return;
    }
    const OrbitPartition c = cycles(cur);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (c.block_of(a) != c.block_of(b)) continue;
        Permutation t = Permutation::transposition(n, a, b);
        Permutation next = t * cur;
        word.push_back(std::move(t));
        rec(next);
        word.pop_back();
      }
  };
  rec(p);
  return out;
}

std::vector<std::size_t> contraction_steps(const Permutation& s, std::span<const Permutation> word) {
  std::vector<std::size_t> steps;
  Permutation cur = s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    Permutation next = cur * word[i];
    if (degree(next) == degree(cur) - 1) steps.push_back(i);
    cur = std::move(next);
  }
  return steps;
}

GammaData gamma_data(const SymmetricProduct& sp, int g, int h) {
  const std::array<Permutation, 2> gens{sp.element(g), sp.element(h)};
  const int gh = sp.group().mul(g, h);
  const OrbitPartition discrete = OrbitPartition::discrete(sp.n());
  GammaData d;
  d.intersection = group_orbits(gens, sp.n());
  d.chain = sp.chain_element(g, minimal_transposition_word(sp.element(h)));
  d.restricted = sp.restrict(discrete, sp.orbits(gh), d.chain);
  d.tilde = sp.gamma_tilde(g, h);
  d.perp = sp.pushforward(sp.orbits(gh), d.intersection, sp.power(d.intersection.size()).unit());
  d.bar = sp.section(sp.orbits(gh), d.intersection, d.tilde);
  return d;
}

std::vector<SparseVec> restriction_kernel(const SymmetricProduct& sp, const OrbitPartition& target) {
  const OrbitPartition discrete = OrbitPartition::discrete(sp.n());
  const std::size_t src = sp.power(static_cast<std::size_t>(sp.n())).dim();
  const std::size_t dst = sp.power(target.size()).dim();
  Matrix m(dst, src);
  for (std::uint32_t k = 0; k < src; ++k) {
    const SparseVec image = sp.restrict(discrete, target, SparseVec::unit(k));
    for (const auto& [i, v] : image.entries()) m(i, k) = v;
  }
  std::vector<SparseVec> out;
  for (const auto& v : nullspace(m)) out.push_back(SparseVec::from_dense(v));
  return out;
}

SparseVec act_on_untwisted(const SymmetricProduct& sp, int k, const SparseVec& v) {
  const int n = sp.n();
  const Permutation& p = sp.element(k);
  const TensorIndexer& idx = sp.power(static_cast<std::size_t>(n)).indexer();
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(n)), moved(static_cast<std::size_t>(n));
  SparseVec out;
  for (const auto& [i, c] : v.entries()) {
    idx.decode(i, digits);
    for (int a = 0; a < n; ++a) moved[static_cast<std::size_t>(p(a))] = digits[static_cast<std::size_t>(a)];
    out.push_unchecked(idx.encode(moved), c);
  }
  out.normalize();
  return out;
}

namespace {

std::string tensor_str(const SymmetricProduct& sp, const OrbitPartition& part, const SparseVec& v) {
  const TensorPower& pw = sp.power(part.size());
  std::string out;
  for (const auto& [i, c] : v.entries()) out += (out.empty() ? "" : " + ") + c.str() + "*" + pw.label(i);
  return out.empty() ? std::string("0") : out;
}

}  // namespace

Report check_compatible_pair(const SymmetricProduct& sp, int p, bool super_signs) {
  const FiniteGroup& grp = sp.group();
  const int order = static_cast<int>(grp.order());
  const OrbitPartition discrete = OrbitPartition::discrete(sp.n());
  std::vector<SparseVec> gamma(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  auto key = [&](int g, int h) { return static_cast<std::size_t>(g) * static_cast<std::size_t>(order) + static_cast<std::size_t>(h); };
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      gamma[key(g, h)] = sp.chain_element(g, minimal_transposition_word(sp.element(h)));
  auto len = [&](int g) { return degree(sp.element(g)); };
  auto phi = [&](int g, int h) { return sign_power(static_cast<long long>(p) * len(g) * len(h)); };
  auto label = [&](int g) { return grp.label(g); };

  Report report;
  report.subject = "compatible pair, p = " + std::to_string(p) + (super_signs ? ", super signs" : "");

  CheckResult gc{"grpcompat", "phi_{g,h} gamma_{ghg^-1,g} = gamma_{g,h} mod I_{gh}", true, 0, std::nullopt};
  for (int g = 0; g < order && gc.passed; ++g)
    for (int h = 0; h < order && gc.passed; ++h) {
      ++gc.instances;
      const int gh = grp.mul(g, h);
      Scalar s = phi(g, h);
      if (super_signs) s *= sign_power(static_cast<long long>(len(g)) * len(h));
      const SparseVec lhs = sp.restrict(discrete, sp.orbits(gh), gamma[key(grp.conj(g, h), g)].scaled(s));
      const SparseVec rhs = sp.restrict(discrete, sp.orbits(gh), gamma[key(g, h)]);
      if (lhs != rhs) {
        gc.passed = false;
        gc.witness = Witness{"g=" + label(g) + ", h=" + label(h), tensor_str(sp, sp.orbits(gh), lhs),
                             tensor_str(sp, sp.orbits(gh), rhs)};
      }
    }
  report.checks.push_back(std::move(gc));

  CheckResult aa{"algaut", "phi_{k,g} phi_{k,h} gamma_{kgk^-1,khk^-1} = phi_k(gamma_{g,h}) phi_{k,gh} mod I_{kghk^-1}",
                 true, 0, std::nullopt};
  for (int k = 0; k < order && aa.passed; ++k)
    for (int g = 0; g < order && aa.passed; ++g)
      for (int h = 0; h < order && aa.passed; ++h) {
        ++aa.instances;
        const int gh = grp.mul(g, h);
        const int target = grp.conj(k, gh);
        const SparseVec lhs = sp.restrict(
            discrete, sp.orbits(target), gamma[key(grp.conj(k, g), grp.conj(k, h))].scaled(phi(k, g) * phi(k, h)));
        const SparseVec rhs =
            sp.restrict(discrete, sp.orbits(target), act_on_untwisted(sp, k, gamma[key(g, h)]).scaled(phi(k, gh)));
        if (lhs != rhs) {
          aa.passed = false;
          aa.witness = Witness{"k=" + label(k) + ", g=" + label(g) + ", h=" + label(h),
                               tensor_str(sp, sp.orbits(target), lhs), tensor_str(sp, sp.orbits(target), rhs)};
        }
      }
  report.checks.push_back(std::move(aa));
  return report;
}

GFrobeniusAlgebra hilbert_twist(const GFrobeniusAlgebra& x) { return qw_twist(x, Scalar(-1)); }

GFrobeniusAlgebra qw_twist(const GFrobeniusAlgebra& x, const Scalar& lambda) {
  const int n = x.group().symmetric_degree();
  if (n == 0) throw InvalidArgument("twist by the normalized cocycle needs an S_n-algebra");
  if (lambda.is_zero()) throw InvalidArgument("lambda must be nonzero");
  const Cocycle2 alpha = normalized_sn_cocycle(n, lambda, std::max(n, kDefaultDegreeBound));
  return twist(x, alpha, SuperTwist::trivial(x.group()));
}

}  // namespace orbifrob
