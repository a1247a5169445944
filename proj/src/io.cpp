#include "orbifrob/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "orbifrob/errors.hpp"

namespace orbifrob::io {

namespace {

Scalar scalar_from(const Json& v) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + v.dump());
}

std::size_t index_from(const Json& v, std::size_t limit, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " index must be an integer, got " + v.dump());
  const auto i = v.get<std::int64_t>();
  if (i < 0 || static_cast<std::size_t>(i) >= limit)
    throw ParseError(std::string(what) + " index " + std::to_string(i) + " out of range [0, " + std::to_string(limit) +
                     ")");
  return static_cast<std::size_t>(i);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return a;
}

const Json& row(const Json& r, std::size_t width, const char* what) {
  if (!r.is_array() || r.size() != width)
    throw ParseError(std::string(what) + " rows need " + std::to_string(width) + " entries, got " + r.dump());
  return r;
}

std::vector<BasisElement> basis_from(const Json& a) {
  if (!a.is_array()) throw ParseError("basis must be an array");
  std::vector<BasisElement> basis;
  for (const auto& b : a) {
    BasisElement e;
    e.label = field(b, "label").get<std::string>();
    e.degree = field(b, "degree").get<int>();
    e.parity = b.contains("parity") ? b.at("parity").get<int>() : 0;
    if (e.parity != 0 && e.parity != 1) throw ParseError("parity must be 0 or 1");
    basis.push_back(std::move(e));
  }
  return basis;
}

Json basis_json(const std::vector<BasisElement>& basis) {
  Json a = Json::array();
  for (const auto& b : basis) a.push_back({{"label", b.label}, {"degree", b.degree}, {"parity", b.parity}});
  return a;
}

Json sparse_json(const SparseVec& v) {
  Json a = Json::array();
  for (const auto& [i, c] : v.entries()) a.push_back(Json::array({i, c.str()}));
  return a;
}

SparseVec sparse_from(const Json& a, std::size_t dim, const char* what) {
  if (!a.is_array()) throw ParseError(std::string(what) + " must be an array");
  Accumulator acc(dim);
  for (const auto& r : a) {
    row(r, 2, what);
    acc.add(static_cast<std::uint32_t>(index_from(r[0], dim, what)), scalar_from(r[1]));
  }
  return acc.take();
}

template <class F>
auto translate(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

void dump_into(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      dump_into(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j)
      if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object()))) flat = false;
    if (flat) {
      os << j.dump();
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << inner;
      dump_into(os, j[i], indent + 2);
    }
    os << "\n" << pad << "]";
    return;
  }
  os << j.dump();
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

}  // namespace

Json to_json(const FrobeniusAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = basis_json(a.basis());
  Json unit = Json::array();
  for (const auto& c : a.unit()) unit.push_back(c.str());
  j["unit"] = unit;
  Json metric = Json::array();
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (!a.metric()(r, c).is_zero()) metric.push_back(Json::array({r, c, a.metric()(r, c).str()}));
  j["metric"] = metric;
  Json structure = Json::array();
  for (const auto& e : a.structure().entries) structure.push_back(Json::array({e.i, e.j, e.k, e.value.str()}));
  j["structure"] = structure;
  return j;
}

FrobeniusAlgebra frobenius_from_json(const Json& j) {
  return translate([&] {
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("A");
    std::vector<BasisElement> basis = basis_from(field(j, "basis"));
    const std::size_t dim = basis.size();
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != dim) throw ParseError("dim does not match basis length");
    if (dim == 0) throw ParseError("algebra must have positive dimension");
    const Json& u = array_field(j, "unit");
    if (u.size() != dim) throw ParseError("unit must have dim entries");
    Vector unit;
    for (const auto& c : u) unit.push_back(scalar_from(c));
    Matrix metric(dim, dim);
    if (j.contains("metric"))
      for (const auto& r : array_field(j, "metric")) {
        row(r, 3, "metric");
        metric(index_from(r[0], dim, "metric"), index_from(r[1], dim, "metric")) += scalar_from(r[2]);
      }
    SparseTensor3 structure;
    if (j.contains("structure"))
      for (const auto& r : array_field(j, "structure")) {
        row(r, 4, "structure");
        structure.entries.push_back({static_cast<std::uint32_t>(index_from(r[0], dim, "structure")),
                                     static_cast<std::uint32_t>(index_from(r[1], dim, "structure")),
                                     static_cast<std::uint32_t>(index_from(r[2], dim, "structure")),
                                     scalar_from(r[3])});
      }
    structure.canonicalize();
    return FrobeniusAlgebra(name, std::move(basis), std::move(unit), std::move(metric), std::move(structure));
  });
}

Json to_json(const FiniteGroup& g) {
  if (g.symmetric_degree() > 0) return Json{{"type", "S_n"}, {"n", g.symmetric_degree()}};
  return Json{{"type", "table"}, {"labels", g.labels()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const Json& j, int bound) {
  return translate([&] {
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      if (s.size() > 2 && s.rfind("S_", 0) == 0) return FiniteGroup::symmetric(std::stoi(s.substr(2)), bound);
      throw ParseError("unknown group '" + s + "'");
    }
    const auto type = field(j, "type").get<std::string>();
    if (type == "S_n") {
      const int n = field(j, "n").get<int>();
      if (n < 1) throw ParseError("S_n needs n >= 1");
      return FiniteGroup::symmetric(n, bound);
    }
    if (type == "table")
      return FiniteGroup(field(j, "labels").get<std::vector<std::string>>(),
                         field(j, "table").get<std::vector<std::vector<int>>>());
    throw ParseError("unknown group type '" + type + "'");
  });
}

Json to_json(const GFrobeniusAlgebra& x) {
  const int order = static_cast<int>(x.order());
  Json j;
  j["name"] = x.name();
  j["group"] = to_json(x.group());
  Json sectors = Json::array();
  for (int g = 0; g < order; ++g) {
    Json s;
    s["element"] = x.group().label(g);
    s["basis"] = basis_json(x.basis(g));
    s["character"] = x.character(g).str();
    s["super_shift"] = x.super_shift(g);
    if (x.generator(g)) s["generator"] = sparse_json(*x.generator(g));
    sectors.push_back(std::move(s));
  }
  j["sectors"] = sectors;
  j["unit"] = sparse_json(x.unit());
  Json product = Json::array();
  Json action = Json::array();
  Json metric = Json::array();
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      const SparseMap& p = x.product(g, h);
      const std::size_t dh = x.dim(h);
      for (std::size_t col = 0; col < p.in_dim(); ++col)
        for (const auto& [k, c] : p.column(col).entries())
          product.push_back(Json::array({g, h, col / dh, col % dh, k, c.str()}));
      const SparseMap& a = x.action(g, h);
      for (std::size_t i = 0; i < a.in_dim(); ++i)
        for (const auto& [k, c] : a.column(i).entries()) action.push_back(Json::array({g, h, i, k, c.str()}));
    }
    const Matrix& m = x.metric(g);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) metric.push_back(Json::array({g, r, c, m(r, c).str()}));
  }
  j["product"] = product;
  j["action"] = action;
  j["metric"] = metric;
  return j;
}

GFrobeniusAlgebra gfrob_from_json(const Json& j, int bound) {
  return translate([&] {
    FiniteGroup group = group_from_json(field(j, "group"), bound);
    const std::size_t order = group.order();
    const Json& sj = array_field(j, "sectors");
    if (sj.size() != order) throw ParseError("need one sector per group element");
    std::vector<std::vector<BasisElement>> sectors;
    for (std::size_t g = 0; g < order; ++g) {
      if (sj[g].contains("element") && sj[g].at("element").get<std::string>() != group.label(static_cast<int>(g)))
        throw ParseError("sector " + std::to_string(g) + " is labelled '" + sj[g].at("element").get<std::string>() +
                         "', expected '" + group.label(static_cast<int>(g)) + "'");
      sectors.push_back(basis_from(field(sj[g], "basis")));
    }
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("A");
    GFrobeniusAlgebra x(name, std::move(group), std::move(sectors));
    const FiniteGroup& G = x.group();
    for (std::size_t gi = 0; gi < order; ++gi) {
      const int g = static_cast<int>(gi);
      const Json& s = sj[gi];
      if (s.contains("character")) x.set_character(g, scalar_from(s.at("character")));
      if (s.contains("super_shift")) x.set_super_shift(g, s.at("super_shift").get<int>());
      if (s.contains("generator")) x.set_generator(g, sparse_from(s.at("generator"), x.dim(g), "generator"));
    }
    x.set_unit(sparse_from(field(j, "unit"), x.dim(G.identity()), "unit"));
    if (j.contains("product"))
      for (const auto& r : array_field(j, "product")) {
        row(r, 6, "product");
        const int g = static_cast<int>(index_from(r[0], order, "product"));
        const int h = static_cast<int>(index_from(r[1], order, "product"));
        const std::size_t i = index_from(r[2], x.dim(g), "product");
        const std::size_t jj = index_from(r[3], x.dim(h), "product");
        const std::size_t k = index_from(r[4], x.dim(G.mul(g, h)), "product");
        SparseVec& col = x.product(g, h).column(i * x.dim(h) + jj);
        col.add_scaled(SparseVec::unit(static_cast<std::uint32_t>(k)), scalar_from(r[5]));
      }
    if (j.contains("action"))
      for (const auto& r : array_field(j, "action")) {
        row(r, 5, "action");
        const int g = static_cast<int>(index_from(r[0], order, "action"));
        const int h = static_cast<int>(index_from(r[1], order, "action"));
        const std::size_t i = index_from(r[2], x.dim(h), "action");
        const std::size_t k = index_from(r[3], x.dim(G.conj(g, h)), "action");
        x.action(g, h).column(i).add_scaled(SparseVec::unit(static_cast<std::uint32_t>(k)), scalar_from(r[4]));
      }
    if (j.contains("metric"))
      for (const auto& r : array_field(j, "metric")) {
        row(r, 4, "metric");
        const int g = static_cast<int>(index_from(r[0], order, "metric"));
        const std::size_t i = index_from(r[1], x.dim(g), "metric");
        const std::size_t c = index_from(r[2], x.dim(G.inv(g)), "metric");
        x.metric(g)(i, c) += scalar_from(r[3]);
      }
    x.check_shapes();
    return x;
  });
}

Json to_json(const Cocycle2& alpha) {
  const FiniteGroup& g = alpha.group();
  const int n = static_cast<int>(g.order());
  Json values = Json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!alpha(a, b).is_one()) values.push_back(Json::array({g.label(a), g.label(b), alpha(a, b).str()}));
  return Json{{"group", to_json(g)}, {"values", values}};
}

Cocycle2 cocycle_from_json(const Json& j, int bound) {
  return translate([&] {
    FiniteGroup group = group_from_json(field(j, "group"), bound);
    Cocycle2 alpha = Cocycle2::trivial(group);
    if (j.contains("values"))
      for (const auto& r : array_field(j, "values")) {
        row(r, 3, "values");
        const int a = parse_group_element(group, r[0].get<std::string>());
        const int b = parse_group_element(group, r[1].get<std::string>());
        alpha.set(a, b, scalar_from(r[2]));
      }
    return alpha;
  });
}

Json to_json(const CheckResult& c) {
  Json j{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"instances", c.instances}};
  if (c.witness)
    j["witness"] = Json{{"where", c.witness->where}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
  else
    j["witness"] = nullptr;
  return j;
}

std::string report_jsonl(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    Json j = to_json(c);
    j["subject"] = r.subject;
    out += j.dump() + "\n";
  }
  return out;
}

std::string dump(const Json& j) {
  std::ostringstream os;
  dump_into(os, j, 0);
  os << "\n";
  return os.str();
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidArgument("write failed for " + path.string());
}

bool is_gfrob_document(const Json& j) { return j.is_object() && j.contains("group"); }

int parse_group_element(const FiniteGroup& g, std::string_view text) {
  const std::string t = trim(text);
  const int direct = g.find(t);
  if (direct >= 0) return direct;
  if (g.symmetric_degree() > 0) {
    try {
      return g.index_of(Permutation::parse(t, g.symmetric_degree()));
    } catch (const ParseError&) {
    } catch (const InvalidArgument&) {
    }
  }
  throw ParseError("unknown group element '" + t + "'");
}

namespace {

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip_outer_parens(std::string s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = trim(std::string_view(s).substr(1, s.size() - 2));
  }
  return s;
}

/// Basis vector for a label or tuple; "1" falls back to the generator.
SparseVec basis_vector(const GFrobeniusAlgebra& x, int g, std::string label) {
  label = trim(label);
  if (label.size() >= 2 && label.front() == '(' && label.back() == ')' && label.find(',') != std::string::npos) {
    std::string joined;
    for (const auto& part : split_top(std::string_view(label).substr(1, label.size() - 2), ',')) {
      if (!joined.empty()) joined += "⊗";
      joined += trim(part);
    }
    label = joined;
  }
  const auto& basis = x.basis(g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].label == label) return SparseVec::unit(static_cast<std::uint32_t>(i));
  const std::string stripped = strip_outer_parens(label);
  if (stripped != label) return basis_vector(x, g, stripped);
  if ((label == "1" || label.empty()) && x.generator(g)) return *x.generator(g);
  throw ParseError("unknown basis label '" + label + "' in sector " + x.group().label(g));
}

SparseVec parse_term(const GFrobeniusAlgebra& x, int g, const std::string& term) {
  const std::string t = trim(term);
  if (t.empty()) throw ParseError("empty term");
  for (std::size_t i = 0; i < x.basis(g).size(); ++i)
    if (x.basis(g)[i].label == t) return SparseVec::unit(static_cast<std::uint32_t>(i));
  const auto star = t.find('*');
  if (star != std::string::npos)
    return basis_vector(x, g, t.substr(star + 1)).scaled(Scalar::parse(t.substr(0, star)));
  std::size_t cut = 0;
  while (cut < t.size() && (std::isdigit(static_cast<unsigned char>(t[cut])) || t[cut] == '/')) ++cut;
  if (cut == 0) return basis_vector(x, g, t);
  const Scalar c = Scalar::parse(t.substr(0, cut));
  try {
    return basis_vector(x, g, t.substr(cut)).scaled(c);
  } catch (const ParseError&) {
    throw ParseError("unknown term '" + t + "' in sector " + x.group().label(g));
  }
}

SparseVec parse_sum(const GFrobeniusAlgebra& x, int g, std::string expr) {
  expr = strip_outer_parens(trim(expr));
  SparseVec out;
  std::string cur;
  int depth = 0;
  int sign = 1;
  bool any = false;
  auto flush = [&] {
    out.add_scaled(parse_term(x, g, cur), Scalar(sign));
    any = true;
    cur.clear();
    sign = 1;
  };
  for (char c : expr) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (!trim(cur).empty()) flush();
      else if (any && c == '+') throw ParseError("dangling operator in '" + expr + "'");
      if (c == '-') sign = -sign;
      continue;
    }
    cur += c;
  }
  if (trim(cur).empty()) throw ParseError("incomplete element '" + expr + "'");
  flush();
  return out;
}

}  // namespace

SectorElement parse_element(const GFrobeniusAlgebra& x, std::string_view text) {
  const std::string t = replace_all(trim(text), "−", "-");
  if (t.rfind("sector", 0) == 0) {
    const auto semi = t.find(';');
    const auto eq = t.find('=');
    if (semi == std::string::npos || eq == std::string::npos || eq > semi)
      throw ParseError("expected 'sector=<element>; coeffs={...}'");
    const int g = parse_group_element(x.group(), t.substr(eq + 1, semi - eq - 1));
    std::string rest = trim(std::string_view(t).substr(semi + 1));
    const auto eq2 = rest.find('=');
    if (rest.rfind("coeffs", 0) != 0 || eq2 == std::string::npos) throw ParseError("expected 'coeffs={...}'");
    std::string body = trim(std::string_view(rest).substr(eq2 + 1));
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') throw ParseError("coeffs must be enclosed in {}");
    body = body.substr(1, body.size() - 2);
    SparseVec v;
    if (!trim(body).empty())
      for (const auto& entry : split_top(body, ',')) {
        const auto colon = entry.rfind(':');
        if (colon == std::string::npos) throw ParseError("coefficient entry without ':' in '" + entry + "'");
        v.add_scaled(basis_vector(x, g, entry.substr(0, colon)), Scalar::parse(entry.substr(colon + 1)));
      }
    return SectorElement{g, std::move(v)};
  }
  const auto at = t.rfind('@');
  if (at == std::string::npos) throw ParseError("element needs '@<sector>': '" + t + "'");
  const int g = parse_group_element(x.group(), t.substr(at + 1));
  const std::string expr = trim(std::string_view(t).substr(0, at));
  if (expr == "0") return SectorElement{g, SparseVec{}};
  return SectorElement{g, parse_sum(x, g, expr)};
}

}  // namespace orbifrob::io
