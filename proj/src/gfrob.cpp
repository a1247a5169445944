#include "orbifrob/gfrob.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"

namespace orbifrob {

GFrobeniusAlgebra::GFrobeniusAlgebra(std::string name, FiniteGroup group,
                                     std::vector<std::vector<BasisElement>> sectors)
    : name_(std::move(name)), group_(std::move(group)), sectors_(std::move(sectors)) {
  const std::size_t n = group_.order();
  if (sectors_.size() != n) throw InvalidArgument("number of sectors must equal the group order");
  products_.resize(n * n);
  actions_.resize(n * n);
  metrics_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    const int gi = static_cast<int>(g);
    metrics_[g] = Matrix(dim(gi), dim(group_.inv(gi)));
    for (std::size_t h = 0; h < n; ++h) {
      const int hi = static_cast<int>(h);
      products_[g * n + h] = SparseMap(dim(gi) * dim(hi), dim(group_.mul(gi, hi)));
      actions_[g * n + h] = SparseMap(dim(hi), dim(group_.conj(gi, hi)));
    }
  }
  character_.assign(n, Scalar(1));
  super_shift_.assign(n, 0);
  generators_.resize(n);
}

std::size_t GFrobeniusAlgebra::total_dim() const {
  std::size_t s = 0;
  for (const auto& sec : sectors_) s += sec.size();
  return s;
}

int GFrobeniusAlgebra::total_parity(int g, std::size_t i) const {
  return (basis(g)[i].parity + super_shift(g)) % 2;
}

bool GFrobeniusAlgebra::is_super() const {
  for (std::size_t g = 0; g < order(); ++g)
    for (std::size_t i = 0; i < dim(static_cast<int>(g)); ++i)
      if (total_parity(static_cast<int>(g), i) != 0) return true;
  return false;
}

void GFrobeniusAlgebra::check_shapes() const {
  const int n = static_cast<int>(order());
  auto where = [&](const char* what, int g, int h) {
    return std::string(what) + " (" + group_.label(g) + ", " + group_.label(h) + ")";
  };
  for (int g = 0; g < n; ++g) {
    const Matrix& m = metric(g);
    if (m.rows() != dim(g) || m.cols() != dim(group_.inv(g)))
      throw InvalidArgument("metric block of sector " + group_.label(g) + " has wrong shape");
    for (int h = 0; h < n; ++h) {
      const SparseMap& p = product(g, h);
      if (p.in_dim() != dim(g) * dim(h) || p.out_dim() != dim(group_.mul(g, h)))
        throw InvalidArgument(where("product block", g, h) + " has wrong shape");
      for (std::size_t c = 0; c < p.in_dim(); ++c)
        for (const auto& [k, v] : p.column(c).entries())
          if (k >= p.out_dim()) throw InvalidArgument(where("product block", g, h) + " has an index out of range");
      const SparseMap& a = action(g, h);
      if (a.in_dim() != dim(h) || a.out_dim() != dim(group_.conj(g, h)))
        throw InvalidArgument(where("action block", g, h) + " has wrong shape");
      for (std::size_t c = 0; c < a.in_dim(); ++c)
        for (const auto& [k, v] : a.column(c).entries())
          if (k >= a.out_dim()) throw InvalidArgument(where("action block", g, h) + " has an index out of range");
    }
    if (generators_[static_cast<std::size_t>(g)])
      for (const auto& [k, v] : generators_[static_cast<std::size_t>(g)]->entries())
        if (k >= dim(g)) throw InvalidArgument("generator of sector " + group_.label(g) + " out of range");
  }
  for (const auto& [k, v] : unit_.entries())
    if (k >= dim(group_.identity())) throw InvalidArgument("unit index out of range");
}

SparseVec GFrobeniusAlgebra::multiply(int g, const SparseVec& a, int h, const SparseVec& b) const {
  const SparseMap& p = product(g, h);
  const std::size_t dh = dim(h);
  Accumulator acc(p.out_dim());
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) acc.add_scaled(p.column(i * dh + j), x * y);
  return acc.take();
}

SectorElement GFrobeniusAlgebra::multiply(const SectorElement& a, const SectorElement& b) const {
  return {group_.mul(a.sector, b.sector), multiply(a.sector, a.coeffs, b.sector, b.coeffs)};
}

SparseVec GFrobeniusAlgebra::act(int k, int h, const SparseVec& v) const { return action(k, h).apply(v); }

Scalar GFrobeniusAlgebra::pair(int g, const SparseVec& a, const SparseVec& b) const {
  const Matrix& m = metric(g);
  Scalar s;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries())
      if (!m(i, j).is_zero()) s += x * m(i, j) * y;
  return s;
}

std::optional<int> GFrobeniusAlgebra::top_degree(int g) const {
  const Matrix& m = metric(g);
  const auto& bg = basis(g);
  const auto& bi = basis(group_.inv(g));
  std::optional<int> d;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      const int s = bg[i].degree + bi[j].degree;
      if (d && *d != s) return std::nullopt;
      d = s;
    }
  return d;
}

bool GFrobeniusAlgebra::same_structure(const GFrobeniusAlgebra& other) const {
  if (!(group_.table() == other.group_.table())) return false;
  for (std::size_t g = 0; g < order(); ++g) {
    const auto& a = sectors_[g];
    const auto& b = other.sectors_[g];
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].degree != b[i].degree || a[i].parity != b[i].parity) return false;
  }
  return products_ == other.products_ && actions_ == other.actions_ && metrics_ == other.metrics_ &&
         unit_ == other.unit_ && character_ == other.character_ && super_shift_ == other.super_shift_;
}

std::string format_element(const GFrobeniusAlgebra& x, int g, const SparseVec& v) {
  const std::string sector = x.group().label(g);
  if (v.empty()) return "0@" + sector;
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    const std::string& label = x.basis(g)[i].label;
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (!mag.is_one()) {
      const bool glue = mag.is_integer() && !label.empty() && !std::isdigit(static_cast<unsigned char>(label[0]));
      os << mag << (glue ? "" : "*");
    }
    os << label;
  }
  if (v.nnz() > 1) return "(" + os.str() + ")@" + sector;
  return os.str() + "@" + sector;
}

// ------------------------------------------------------------------ verifier

namespace {

struct ItemResult {
  std::size_t instances = 0;
  std::optional<Witness> witness;
};

template <class F>
CheckResult run_check(std::string id, std::string title, std::size_t items, int threads, F&& body) {
  std::vector<std::size_t> counts(items, 0);
  std::size_t best = items;
  std::optional<Witness> best_witness;
  const long long count = static_cast<long long>(items);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (long long t = 0; t < count; ++t) {
    ItemResult r = body(static_cast<std::size_t>(t));
    counts[static_cast<std::size_t>(t)] = r.instances;
    if (r.witness) {
#pragma omp critical(orbifrob_witness)
      {
        if (static_cast<std::size_t>(t) < best) {
          best = static_cast<std::size_t>(t);
          best_witness = std::move(r.witness);
        }
      }
    }
  }
  CheckResult out;
  out.id = std::move(id);
  out.title = std::move(title);
  for (auto c : counts) out.instances += c;
  out.passed = !best_witness.has_value();
  out.witness = std::move(best_witness);
  return out;
}

class Verifier {
 public:
  Verifier(const GFrobeniusAlgebra& x, bool super, int threads)
      : x_(x), g_(x.group()), n_(static_cast<int>(x.order())), super_(super), threads_(threads) {}

  Report run() {
    Report report;
    report.subject = "G-Frobenius algebra '" + x_.name() + "'";
    report.checks.push_back(nondegeneracy());
    report.checks.push_back(representation());
    report.checks.push_back(character());
    report.checks.push_back(associativity());
    report.checks.push_back(commutativity());
    report.checks.push_back(unit());
    report.checks.push_back(metric_invariance());
    report.checks.push_back(self_invariance());
    report.checks.push_back(multiplication_invariance());
    report.checks.push_back(metric_projective_invariance());
    report.checks.push_back(trace());
    return report;
  }

 private:
  std::string el(int g, const SparseVec& v) const { return format_element(x_, g, v); }
  std::string lab(int g, std::size_t i) const { return x_.basis(g)[i].label + "@" + g_.label(g); }
  std::string gl(int g) const { return g_.label(g); }
  SparseVec col(int g, int h, std::size_t i, std::size_t j) const {
    return x_.product(g, h).column(i * x_.dim(h) + j);
  }
  Scalar sgn(int g, std::size_t i, int h, std::size_t j) const {
    if (!super_) return Scalar(1);
    return sign_power(x_.total_parity(g, i) * x_.total_parity(h, j));
  }

  CheckResult nondegeneracy() {
    return run_check("nondegeneracy", "Nondegenerate sector pairings", static_cast<std::size_t>(n_), threads_,
                     [&](std::size_t t) {
                       ItemResult r;
                       const int g = static_cast<int>(t);
                       r.instances = 1;
                       const Matrix& m = x_.metric(g);
                       if (m.rows() != m.cols()) {
                         r.witness = Witness{"eta on A_" + gl(g) + " x A_" + gl(g_.inv(g)),
                                             "dim " + std::to_string(m.rows()), "dim " + std::to_string(m.cols())};
                         return r;
                       }
                       const std::size_t rk = rank(m);
                       if (rk != m.rows())
                         r.witness = Witness{"eta on A_" + gl(g) + " x A_" + gl(g_.inv(g)),
                                             "rank " + std::to_string(rk), "dim " + std::to_string(m.rows())};
                       return r;
                     });
  }

  CheckResult representation() {
    return run_check("representation", "phi is a group homomorphism", static_cast<std::size_t>(n_) * n_, threads_,
                     [&](std::size_t t) {
                       ItemResult r;
                       const int g = static_cast<int>(t / n_);
                       const int h = static_cast<int>(t % n_);
                       const int gh = g_.mul(g, h);
                       for (int k = 0; k < n_ && !r.witness; ++k) {
                         const int hk = g_.conj(h, k);
                         for (std::size_t i = 0; i < x_.dim(k) && !r.witness; ++i) {
                           ++r.instances;
                           const auto e = SparseVec::unit(static_cast<std::uint32_t>(i));
                           const auto lhs = x_.act(g, hk, x_.act(h, k, e));
                           const auto rhs = x_.act(gh, k, e);
                           if (lhs != rhs) {
                             r.witness = Witness{"phi_" + gl(g) + " phi_" + gl(h) + " vs phi_" + gl(gh) + " on " +
                                                     lab(k, i),
                                                 el(g_.conj(gh, k), lhs), el(g_.conj(gh, k), rhs)};
                           } else if (g == g_.identity()) {
                             const auto id = x_.act(g, k, e);
                             if (id != e) r.witness = Witness{"phi_e on " + lab(k, i), el(k, id), el(k, e)};
                           }
                         }
                       }
                       return r;
                     });
  }

  CheckResult character() {
    return run_check("character", "chi is a character", static_cast<std::size_t>(n_), threads_, [&](std::size_t t) {
      ItemResult r;
      const int g = static_cast<int>(t);
      if (x_.character(g).is_zero()) {
        r.instances = 1;
        r.witness = Witness{"chi_" + gl(g), "0", "nonzero"};
        return r;
      }
      for (int h = 0; h < n_ && !r.witness; ++h) {
        ++r.instances;
        const Scalar lhs = x_.character(g_.mul(g, h));
        const Scalar rhs = x_.character(g) * x_.character(h);
        if (lhs != rhs) r.witness = Witness{"chi_" + gl(g_.mul(g, h)) + " vs chi_" + gl(g) + " chi_" + gl(h),
                                            lhs.str(), rhs.str()};
      }
      return r;
    });
  }

  CheckResult associativity() {
    const std::size_t items = static_cast<std::size_t>(n_) * n_ * n_;
    return run_check("a", "Associativity", items, threads_, [&](std::size_t t) {
      ItemResult r;
      const int g = static_cast<int>(t / (n_ * n_));
      const int h = static_cast<int>((t / n_) % n_);
      const int k = static_cast<int>(t % n_);
      const int gh = g_.mul(g, h);
      const int hk = g_.mul(h, k);
      for (std::size_t i = 0; i < x_.dim(g) && !r.witness; ++i)
        for (std::size_t j = 0; j < x_.dim(h) && !r.witness; ++j)
          for (std::size_t l = 0; l < x_.dim(k) && !r.witness; ++l) {
            ++r.instances;
            const auto el_ = SparseVec::unit(static_cast<std::uint32_t>(l));
            const auto ei = SparseVec::unit(static_cast<std::uint32_t>(i));
            const auto lhs = x_.multiply(gh, col(g, h, i, j), k, el_);
            const auto rhs = x_.multiply(g, ei, hk, col(h, k, j, l));
            if (lhs != rhs) {
              const int ghk = g_.mul(gh, k);
              r.witness = Witness{"(" + lab(g, i) + " o " + lab(h, j) + ") o " + lab(k, l), el(ghk, lhs),
                                  el(ghk, rhs)};
            }
          }
      return r;
    });
  }

  CheckResult commutativity() {
    const std::string id = super_ ? "b^σ" : "b";
    const std::string title = super_ ? "Twisted super-commutativity" : "Twisted commutativity";
    return run_check(id, title, static_cast<std::size_t>(n_) * n_, threads_, [&](std::size_t t) {
      ItemResult r;
      const int g = static_cast<int>(t / n_);
      const int h = static_cast<int>(t % n_);
      const int c = g_.conj(g, h);
      const int gh = g_.mul(g, h);
      const SparseMap& pc = x_.product(c, g);
      for (std::size_t i = 0; i < x_.dim(g) && !r.witness; ++i)
        for (std::size_t j = 0; j < x_.dim(h) && !r.witness; ++j) {
          ++r.instances;
          const SparseVec lhs = col(g, h, i, j);
          const SparseVec phi = x_.action(g, h).column(j);
          Accumulator acc(x_.dim(gh));
          for (const auto& [m, v] : phi.entries())
            acc.add_scaled(pc.column(m * x_.dim(g) + i), v * sgn(g, i, c, m));
          const SparseVec rhs = acc.take();
          if (lhs != rhs)
            r.witness = Witness{lab(g, i) + " o " + lab(h, j) + " vs phi_" + gl(g) + "(" + lab(h, j) + ") o " +
                                    lab(g, i),
                                el(gh, lhs), el(gh, rhs)};
        }
      return r;
    });
  }

  CheckResult unit() {
    return run_check("c", "G-invariant unit", static_cast<std::size_t>(n_), threads_, [&](std::size_t t) {
      ItemResult r;
      const int g = static_cast<int>(t);
      const int e = g_.identity();
      const SparseVec& one = x_.unit();
      ++r.instances;
      const auto phi1 = x_.act(g, e, one);
      if (phi1 != one) {
        r.witness = Witness{"phi_" + gl(g) + "(1)", el(e, phi1), el(e, one)};
        return r;
      }
      for (std::size_t i = 0; i < x_.dim(g) && !r.witness; ++i) {
        ++r.instances;
        const auto ei = SparseVec::unit(static_cast<std::uint32_t>(i));
        const auto left = x_.multiply(e, one, g, ei);
        const auto right = x_.multiply(g, ei, e, one);
        if (left != ei) r.witness = Witness{"1 o " + lab(g, i), el(g, left), el(g, ei)};
        else if (right != ei) r.witness = Witness{lab(g, i) + " o 1", el(g, right), el(g, ei)};
      }
      return r;
    });
  }

  CheckResult metric_invariance() {
    return run_check("d", "Invariance of the metric", static_cast<std::size_t>(n_) * n_, threads_,
                     [&](std::size_t t) {
                       ItemResult r;
                       const int g = static_cast<int>(t / n_);
                       const int h = static_cast<int>(t % n_);
                       const int gh = g_.mul(g, h);
                       const int k = g_.inv(gh);
                       for (std::size_t i = 0; i < x_.dim(g) && !r.witness; ++i)
                         for (std::size_t j = 0; j < x_.dim(h) && !r.witness; ++j)
                           for (std::size_t l = 0; l < x_.dim(k) && !r.witness; ++l) {
                             ++r.instances;
                             const auto ei = SparseVec::unit(static_cast<std::uint32_t>(i));
                             const auto el_ = SparseVec::unit(static_cast<std::uint32_t>(l));
                             const Scalar lhs = x_.pair(g, ei, col(h, k, j, l));
                             const Scalar rhs = x_.pair(gh, col(g, h, i, j), el_);
                             if (lhs != rhs)
                               r.witness = Witness{"eta(" + lab(g, i) + ", " + lab(h, j) + " o " + lab(k, l) +
                                                       ") vs eta(" + lab(g, i) + " o " + lab(h, j) + ", " +
                                                       lab(k, l) + ")",
                                                   lhs.str(), rhs.str()};
                           }
                       return r;
                     });
  }

  CheckResult self_invariance() {
    return run_check("i", "Projective self-invariance of the twisted sectors", static_cast<std::size_t>(n_),
                     threads_, [&](std::size_t t) {
                       ItemResult r;
                       const int g = static_cast<int>(t);
                       const Scalar c = x_.character(g).is_zero() ? Scalar(0) : x_.character(g).inverse();
                       for (std::size_t i = 0; i < x_.dim(g) && !r.witness; ++i) {
                         ++r.instances;
                         const auto ei = SparseVec::unit(static_cast<std::uint32_t>(i), c);
                         const auto lhs = x_.action(g, g).column(i);
                         if (lhs != ei)
                           r.witness = Witness{"phi_" + gl(g) + "(" + lab(g, i) + ")", el(g, lhs), el(g, ei)};
                       }
                       return r;
                     });
  }

  CheckResult multiplication_invariance() {
    const std::size_t items = static_cast<std::size_t>(n_) * n_ * n_;
    return run_check("ii", "G-invariance of the multiplication", items, threads_, [&](std::size_t t) {
      ItemResult r;
      const int k = static_cast<int>(t / (n_ * n_));
      const int g = static_cast<int>((t / n_) % n_);
      const int h = static_cast<int>(t % n_);
      const int gh = g_.mul(g, h);
      const int kg = g_.conj(k, g);
      const int kh = g_.conj(k, h);
      for (std::size_t i = 0; i < x_.dim(g) && !r.witness; ++i)
        for (std::size_t j = 0; j < x_.dim(h) && !r.witness; ++j) {
          ++r.instances;
          const auto lhs = x_.act(k, gh, col(g, h, i, j));
          const auto rhs = x_.multiply(kg, x_.action(k, g).column(i), kh, x_.action(k, h).column(j));
          if (lhs != rhs)
            r.witness = Witness{"phi_" + gl(k) + "(" + lab(g, i) + " o " + lab(h, j) + ")",
                                el(g_.conj(k, gh), lhs), el(g_.conj(k, gh), rhs)};
        }
      return r;
    });
  }

  CheckResult metric_projective_invariance() {
    return run_check("iii", "Projective G-invariance of the metric", static_cast<std::size_t>(n_) * n_, threads_,
                     [&](std::size_t t) {
                       ItemResult r;
                       const int g = static_cast<int>(t / n_);
                       const int h = static_cast<int>(t % n_);
                       const int hi = g_.inv(h);
                       const int c = g_.conj(g, h);
                       const Scalar& chi = x_.character(g);
                       const Scalar factor = chi.is_zero() ? Scalar(0) : (chi * chi).inverse();
                       for (std::size_t i = 0; i < x_.dim(h) && !r.witness; ++i)
                         for (std::size_t j = 0; j < x_.dim(hi) && !r.witness; ++j) {
                           ++r.instances;
                           const Scalar lhs =
                               x_.pair(c, x_.action(g, h).column(i), x_.action(g, hi).column(j));
                           const Scalar rhs = factor * x_.metric(h)(i, j);
                           if (lhs != rhs)
                             r.witness = Witness{"eta(phi_" + gl(g) + " " + lab(h, i) + ", phi_" + gl(g) + " " +
                                                     lab(hi, j) + ")",
                                                 lhs.str(), rhs.str()};
                         }
                       return r;
                     });
  }

  CheckResult trace() {
    const std::string id = super_ ? "iv^σ" : "iv";
    const std::string title = super_ ? "Projective super-trace axiom" : "Projective trace axiom";
    return run_check(id, title, static_cast<std::size_t>(n_) * n_, threads_, [&](std::size_t t) {
      ItemResult r;
      const int g = static_cast<int>(t / n_);
      const int h = static_cast<int>(t % n_);
      const int c = g_.commutator(g, h);
      const int gi = g_.inv(g);
      const int hgh = g_.conj(h, g);
      const int ghg = g_.conj(g, h);
      auto weight = [&](int s, std::size_t i) {
        return (super_ && x_.total_parity(s, i) == 1) ? Scalar(-1) : Scalar(1);
      };
      for (std::size_t m = 0; m < x_.dim(c) && !r.witness; ++m) {
        ++r.instances;
        const auto cm = SparseVec::unit(static_cast<std::uint32_t>(m));
        Scalar left;
        for (std::size_t i = 0; i < x_.dim(g); ++i) {
          const auto v = x_.multiply(c, cm, hgh, x_.action(h, g).column(i));
          const Scalar d = v.at(static_cast<std::uint32_t>(i));
          if (!d.is_zero()) left += weight(g, i) * d;
        }
        Scalar right;
        for (std::size_t j = 0; j < x_.dim(h); ++j) {
          const auto v = x_.act(gi, ghg, x_.multiply(c, cm, h, SparseVec::unit(static_cast<std::uint32_t>(j))));
          const Scalar d = v.at(static_cast<std::uint32_t>(j));
          if (!d.is_zero()) right += weight(h, j) * d;
        }
        left *= x_.character(h);
        right *= x_.character(gi);
        if (left != right)
          r.witness = Witness{"g=" + gl(g) + ", h=" + gl(h) + ", c=" + lab(c, m), left.str(), right.str()};
      }
      return r;
    });
  }

  const GFrobeniusAlgebra& x_;
  const FiniteGroup& g_;
  int n_;
  bool super_;
  int threads_;
};

}  // namespace

Report verify_axioms(const GFrobeniusAlgebra& x, const VerifyOptions& options) {
  try {
    x.check_shapes();
  } catch (const InvalidArgument& e) {
    Report report;
    report.subject = "G-Frobenius algebra '" + x.name() + "'";
    report.checks.push_back(CheckResult{"structure", "Well-formed tables", false, 1, Witness{e.what(), "", ""}});
    return report;
  }
  const double total = static_cast<double>(x.total_dim());
  const double estimate = total * total * total;
  if (estimate > options.budget) throw BudgetExceeded("axiom verification", estimate, options.budget);
  const bool super = options.mode == SignMode::super || (options.mode == SignMode::automatic && x.is_super());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  Report report = Verifier(x, super, threads).run();
  report.checks.insert(report.checks.begin(), CheckResult{"structure", "Well-formed tables", true, 1, std::nullopt});
  return report;
}

// ----------------------------------------------------------- tensor product

GFrobeniusAlgebra tensor_hat(const GFrobeniusAlgebra& x, const GFrobeniusAlgebra& y) {
  if (!(x.group().table() == y.group().table())) throw InvalidArgument("tensor_hat: group mismatch");
  const int n = static_cast<int>(x.order());
  const FiniteGroup& grp = x.group();
  std::vector<std::vector<BasisElement>> sectors(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g)
    for (const auto& a : x.basis(g))
      for (const auto& b : y.basis(g))
        sectors[static_cast<std::size_t>(g)].push_back(
            BasisElement{a.label + std::string(kTensorSeparator) + b.label, a.degree + b.degree,
                         (a.parity + b.parity) % 2});
  GFrobeniusAlgebra out(x.name() + std::string(kTensorSeparator) + y.name(), grp, std::move(sectors));
  auto sp = [&](int g, std::size_t i, const GFrobeniusAlgebra& z) { return z.total_parity(g, i); };

  for (int g = 0; g < n; ++g) {
    out.set_character(g, x.character(g) * y.character(g));
    out.set_super_shift(g, x.super_shift(g) + y.super_shift(g));
    const int gi = grp.inv(g);
    const std::size_t yg = y.dim(g), ygi = y.dim(gi);
    Matrix& m = out.metric(g);
    for (std::size_t i = 0; i < x.dim(g); ++i)
      for (std::size_t j = 0; j < x.dim(gi); ++j) {
        const Scalar& a = x.metric(g)(i, j);
        if (a.is_zero()) continue;
        for (std::size_t ip = 0; ip < yg; ++ip)
          for (std::size_t jp = 0; jp < ygi; ++jp) {
            const Scalar& b = y.metric(g)(ip, jp);
            if (b.is_zero()) continue;
            m(i * yg + ip, j * ygi + jp) = sign_power(sp(g, ip, y) * sp(gi, j, x)) * a * b;
          }
      }
    for (int h = 0; h < n; ++h) {
      const int gh = grp.mul(g, h);
      const std::size_t yh = y.dim(h), ygh = y.dim(gh);
      SparseMap& p = out.product(g, h);
      for (std::size_t i = 0; i < x.dim(g); ++i)
        for (std::size_t ip = 0; ip < yg; ++ip)
          for (std::size_t j = 0; j < x.dim(h); ++j)
            for (std::size_t jp = 0; jp < yh; ++jp) {
              const auto& cx = x.product(g, h).column(i * x.dim(h) + j);
              const auto& cy = y.product(g, h).column(ip * yh + jp);
              SparseVec& dst = p.column((i * yg + ip) * (x.dim(h) * yh) + (j * yh + jp));
              const Scalar s = sign_power(sp(g, ip, y) * sp(h, j, x));
              for (const auto& [k, a] : cx.entries())
                for (const auto& [kp, b] : cy.entries())
                  dst.push_unchecked(static_cast<std::uint32_t>(k * ygh + kp), s * a * b);
              dst.normalize();
            }
      const int c = grp.conj(g, h);
      const std::size_t yc = y.dim(c);
      SparseMap& act = out.action(g, h);
      for (std::size_t j = 0; j < x.dim(h); ++j)
        for (std::size_t jp = 0; jp < yh; ++jp) {
          SparseVec& dst = act.column(j * yh + jp);
          for (const auto& [k, a] : x.action(g, h).column(j).entries())
            for (const auto& [kp, b] : y.action(g, h).column(jp).entries())
              dst.push_unchecked(static_cast<std::uint32_t>(k * yc + kp), a * b);
          dst.normalize();
        }
    }
    if (x.generator(g) && y.generator(g)) {
      const SparseVec parts[2] = {*x.generator(g), *y.generator(g)};
      SparseVec gen;
      for (const auto& [k, a] : parts[0].entries())
        for (const auto& [kp, b] : parts[1].entries())
          gen.push_unchecked(static_cast<std::uint32_t>(k * yg + kp), a * b);
      gen.normalize();
      out.set_generator(g, std::move(gen));
    }
  }
  const int e = grp.identity();
  SparseVec unit;
  for (const auto& [k, a] : x.unit().entries())
    for (const auto& [kp, b] : y.unit().entries())
      unit.push_unchecked(static_cast<std::uint32_t>(k * y.dim(e) + kp), a * b);
  unit.normalize();
  out.set_unit(std::move(unit));
  return out;
}

// -------------------------------------------------------------------- twist

GFrobeniusAlgebra twist(const GFrobeniusAlgebra& x, const Cocycle2& alpha, const SuperTwist& sigma) {
  if (!(alpha.group().table() == x.group().table()) || !(sigma.group().table() == x.group().table()))
    throw InvalidArgument("twist: group mismatch");
  if (!validate(alpha).passed()) throw InvalidArgument("twist: alpha is not a normalized 2-cocycle");
  if (!validate(sigma).passed()) throw InvalidArgument("twist: sigma is not a homomorphism to Z/2");
  const std::vector<Scalar> eps = epsilon(alpha);
  const FiniteGroup& grp = x.group();
  const int n = static_cast<int>(x.order());
  GFrobeniusAlgebra out = x;
  for (int g = 0; g < n; ++g) {
    const int gi = grp.inv(g);
    Matrix& m = out.metric(g);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        m(i, j) *= alpha(g, gi) * sign_power(sigma(g) * x.basis(gi)[j].parity);
      }
    for (int h = 0; h < n; ++h) {
      SparseMap& p = out.product(g, h);
      const std::size_t dh = x.dim(h);
      for (std::size_t c = 0; c < p.in_dim(); ++c)
        p.column(c).scale(alpha(g, h) * sign_power(sigma(g) * x.basis(h)[c % dh].parity));
      const int s = x.super_shift(g) * x.super_shift(h);
      const int sp = ((x.super_shift(g) + sigma(g)) % 2) * ((x.super_shift(h) + sigma(h)) % 2);
      const Scalar f = eps[static_cast<std::size_t>(g) * x.order() + static_cast<std::size_t>(h)] * sign_power(s + sp);
      SparseMap& a = out.action(g, h);
      for (std::size_t c = 0; c < a.in_dim(); ++c) a.column(c).scale(f);
    }
    out.set_character(g, x.character(g) * sign_power(sigma(g)));
    out.set_super_shift(g, x.super_shift(g) + sigma(g));
  }
  return out;
}

// --------------------------------------------------------------- invariants

std::vector<std::size_t> InvariantAlgebra::class_dims() const {
  std::vector<std::size_t> dims(classes.size(), 0);
  for (int c : class_of) ++dims[static_cast<std::size_t>(c)];
  return dims;
}

InvariantAlgebra invariants(const GFrobeniusAlgebra& x) {
  x.check_shapes();
  const FiniteGroup& grp = x.group();
  const int n = static_cast<int>(x.order());
  InvariantAlgebra inv;
  inv.sector_offset.resize(static_cast<std::size_t>(n));
  std::vector<int> owner;
  for (int g = 0; g < n; ++g) {
    inv.sector_offset[static_cast<std::size_t>(g)] = inv.ambient_dim;
    inv.ambient_dim += x.dim(g);
    owner.insert(owner.end(), x.dim(g), g);
  }
  auto offset = [&](int g) { return static_cast<std::uint32_t>(inv.sector_offset[static_cast<std::size_t>(g)]); };
  const Scalar scale = Scalar(1) / Scalar(static_cast<std::int64_t>(n));

  auto project = [&](const SparseVec& v) {
    Accumulator acc(inv.ambient_dim);
    for (const auto& [idx, c] : v.entries()) {
      const int h = owner[idx];
      const std::size_t local = idx - offset(h);
      for (int k = 0; k < n; ++k) {
        const int target = grp.conj(k, h);
        for (const auto& [m, a] : x.action(k, h).column(local).entries()) acc.add(offset(target) + m, c * a * scale);
      }
    }
    return acc.take();
  };

  inv.classes = grp.conjugacy_classes();
  EchelonBasis echelon;
  for (std::size_t ci = 0; ci < inv.classes.size(); ++ci) {
    const int rep = inv.classes[ci].front();
    std::vector<std::size_t> order(x.dim(rep));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x.basis(rep)[a].degree < x.basis(rep)[b].degree; });
    for (std::size_t i : order) {
      const SparseVec pv = project(SparseVec::unit(offset(rep) + static_cast<std::uint32_t>(i)));
      if (project(pv) != pv) throw InvalidArgument("invariants: projector is not idempotent");
      if (echelon.insert(pv)) {
        inv.class_of.push_back(static_cast<int>(ci));
        inv.degree.push_back(x.basis(rep)[i].degree);
      }
    }
  }
  inv.basis = echelon.vectors();

  // Split each basis vector into its sector components.
  struct Part {
    int sector;
    SparseVec v;
  };
  std::vector<std::vector<Part>> parts(inv.basis.size());
  for (std::size_t b = 0; b < inv.basis.size(); ++b) {
    for (const auto& [idx, c] : inv.basis[b].entries()) {
      const int g = owner[idx];
      if (parts[b].empty() || parts[b].back().sector != g) parts[b].push_back(Part{g, {}});
      parts[b].back().v.push_unchecked(idx - offset(g), c);
    }
    for (auto& p : parts[b]) p.v.normalize();
  }

  for (std::size_t a = 0; a < inv.basis.size(); ++a)
    for (std::size_t b = 0; b < inv.basis.size(); ++b) {
      Accumulator acc(inv.ambient_dim);
      for (const auto& pa : parts[a])
        for (const auto& pb : parts[b]) {
          const int gh = grp.mul(pa.sector, pb.sector);
          const SparseVec prod = x.multiply(pa.sector, pa.v, pb.sector, pb.v);
          for (const auto& [k, v] : prod.entries()) acc.add(offset(gh) + k, v);
        }
      const SparseVec prod = acc.take();
      std::vector<Scalar> coords;
      try {
        coords = echelon.coordinates(prod);
      } catch (const InvalidArgument&) {
        throw InvalidArgument("invariants: product of invariant elements is not invariant");
      }
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero())
          inv.structure.entries.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                           static_cast<std::uint32_t>(k), coords[k]});
    }
  inv.structure.canonicalize();

  SparseVec unit;
  for (const auto& [k, v] : x.unit().entries()) unit.push_unchecked(offset(grp.identity()) + k, v);
  unit.normalize();
  try {
    inv.unit = echelon.coordinates(unit);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("invariants: unit is not invariant");
  }

  inv.metric = Matrix(inv.basis.size(), inv.basis.size());
  for (std::size_t a = 0; a < inv.basis.size(); ++a)
    for (std::size_t b = 0; b < inv.basis.size(); ++b) {
      Scalar s;
      for (const auto& pa : parts[a])
        for (const auto& pb : parts[b])
          if (pb.sector == grp.inv(pa.sector)) s += x.pair(pa.sector, pa.v, pb.v);
      inv.metric(a, b) = s;
    }
  inv.metric_degenerate = rank(inv.metric) != inv.basis.size();
  return inv;
}

}  // namespace orbifrob
