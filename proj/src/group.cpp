#include "orbifrob/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "orbifrob/errors.hpp"

namespace orbifrob {

// ----------------------------------------------------------- OrbitPartition

OrbitPartition::OrbitPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  owner_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks) {
    if (b.empty()) throw InvalidArgument("orbit partition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (int i : blocks[bi]) {
      if (i < 0 || i >= n || owner_[static_cast<std::size_t>(i)] != -1) {
        throw InvalidArgument("orbit partition: blocks are not disjoint subsets of {0..n-1}");
      }
      owner_[static_cast<std::size_t>(i)] = static_cast<int>(bi);
    }
  }
  if (std::find(owner_.begin(), owner_.end(), -1) != owner_.end()) {
    throw InvalidArgument("orbit partition: blocks do not cover {0..n-1}");
  }
  blocks_ = std::move(blocks);
}

OrbitPartition OrbitPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i});
  return OrbitPartition(n, std::move(blocks));
}

bool OrbitPartition::refines(const OrbitPartition& coarser) const {
  if (coarser.n_ != n_) return false;
  for (const auto& b : blocks_) {
    const int target = coarser.block_of(b.front());
    for (int i : b)
      if (coarser.block_of(i) != target) return false;
  }
  return true;
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("invalid transposition");
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  auto p = identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters after 'e' in '" + std::string(text) + "'");
    return p;
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> images = p.images_;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character in cycle notation '" + std::string(text) + "'");
      }
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
        if (v > 1000000) throw ParseError("point out of range in '" + std::string(text) + "'");
      }
      if (v < 1 || v > n) throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(v - 1)]) throw ParseError("point repeated in '" + std::string(text) + "'");
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::str() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) os << ' ';
      os << cur + 1;
      first = false;
      cur = static_cast<std::size_t>(images_[cur]);
    }
    os << ')';
  }
  return any ? os.str() : "e";
}

// --------------------------------------------------------------- operations

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("compose: degree mismatch");
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) out[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& g, const Permutation& h) { return compose(compose(g, h), g.inverse()); }

OrbitPartition cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> blocks;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> block;
    for (int cur = s; !seen[static_cast<std::size_t>(cur)]; cur = p(cur)) {
      seen[static_cast<std::size_t>(cur)] = true;
      block.push_back(cur);
    }
    blocks.push_back(std::move(block));
  }
  return OrbitPartition(n, std::move(blocks));
}

int cycle_count(const Permutation& p) { return static_cast<int>(cycles(p).size()); }

int degree(const Permutation& p) { return p.degree() - cycle_count(p); }

OrbitPartition group_orbits(std::span<const Permutation> gens, int n) {
  if (gens.empty()) {
    if (n < 1) throw InvalidArgument("group_orbits: empty generator list needs an explicit degree");
    return OrbitPartition::discrete(n);
  }
  n = gens.front().degree();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : gens) {
    if (g.degree() != n) throw InvalidArgument("group_orbits: generators of different degree");
    for (int i = 0; i < n; ++i) {
      const int a = find(i);
      const int b = find(g(i));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(i);
  }
  return OrbitPartition(n, std::move(blocks));
}

bool is_transversal(const Permutation& p, const Permutation& q) {
  return degree(compose(p, q)) == degree(p) + degree(q);
}

int sign(const Permutation& p) { return degree(p) % 2 == 0 ? 1 : -1; }

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> type;
  const OrbitPartition orbits = cycles(p);
  for (const auto& b : orbits.blocks()) type.push_back(static_cast<int>(b.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<Permutation> enumerate(int n, int bound) {
  if (n < 1) throw InvalidArgument("enumerate: degree must be positive");
  if (n > bound) {
    throw InvalidArgument("enumerate: degree " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  const int n = p.degree();
  std::size_t rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (int v = 0; v < p(i); ++v)
      if (!used[static_cast<std::size_t>(v)]) ++smaller;
    used[static_cast<std::size_t>(p(i))] = true;
    rank = rank * static_cast<std::size_t>(n - i) + smaller;
  }
  return rank;
}

std::vector<Permutation> transpositions(int n) {
  std::vector<Permutation> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.push_back(Permutation::transposition(n, a, b));
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int n, int bound) {
  std::vector<ConjugacyClass> classes;
  for (auto& p : enumerate(n, bound)) {
    auto type = cycle_type(p);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.cycle_type == type; });
    if (it == classes.end()) {
      classes.push_back({std::move(type), {}});
      it = std::prev(classes.end());
    }
    it->members.push_back(std::move(p));
  }
  return classes;
}

// -------------------------------------------------------------- FiniteGroup

namespace {
constexpr std::size_t kMaxStoredTable = 720;
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidArgument("group table: empty group");
  if (table.size() != n) throw InvalidArgument("group table: wrong number of rows");
  table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("group table: ragged row");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidArgument("group table: entry out of range");
      table_.push_back(v);
    }
  }
  validate_and_index();
}

void FiniteGroup::validate_and_index() {
  const int n = static_cast<int>(order());
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidArgument("group table: no identity element");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw InvalidArgument("group table: element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidArgument("group table: not associative");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("group table: duplicate element labels");
  }
}

FiniteGroup FiniteGroup::symmetric(int n, int bound) {
  FiniteGroup g;
  g.sym_n_ = n;
  g.perms_ = enumerate(n, bound);
  const std::size_t order = g.perms_.size();
  for (const auto& p : g.perms_) g.labels_.push_back(p.str());
  if (order > kMaxStoredTable) {
    throw InvalidArgument("FiniteGroup::symmetric: S_" + std::to_string(n) +
                          " is too large for an explicit multiplication table");
  }
  g.table_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      g.table_[a * order + b] = static_cast<int>(lex_rank(compose(g.perms_[a], g.perms_[b])));
  g.identity_ = 0;
  g.inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) g.inverse_[a] = static_cast<int>(lex_rank(g.perms_[a].inverse()));
  return g;
}

int FiniteGroup::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(order(), std::vector<int>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b) out[a][b] = table_[a * order() + b];
  return out;
}

int FiniteGroup::index_of(const Permutation& p) const {
  if (sym_n_ == 0 || p.degree() != sym_n_) throw InvalidArgument("index_of: not a permutation of this group");
  return static_cast<int>(lex_rank(p));
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  const int n = static_cast<int>(order());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int h = 0; h < n; ++h) {
    if (cls[static_cast<std::size_t>(h)] >= 0) continue;
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      const int c = conj(g, h);
      if (cls[static_cast<std::size_t>(c)] < 0) {
        cls[static_cast<std::size_t>(c)] = static_cast<int>(out.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> out;
  for (int h = 0; h < static_cast<int>(order()); ++h)
    if (commute(g, h)) out.push_back(h);
  return out;
}

}  // namespace orbifrob
