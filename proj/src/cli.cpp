#include "orbifrob/cli.hpp"

#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"
#include "orbifrob/grading.hpp"
#include "orbifrob/io.hpp"
#include "orbifrob/models.hpp"
#include "orbifrob/symprod.hpp"

namespace orbifrob::cli {

namespace {

using Input = std::variant<FrobeniusAlgebra, GFrobeniusAlgebra>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FrobeniusAlgebra model_by_name(const std::string& name) {
  if (name == "k") return models::ground_field();
  if (name == "dual_numbers") return models::dual_numbers();
  if (name == "surface") return models::surface();
  throw UsageError("unknown model '" + name + "' (k, dual_numbers, surface)");
}

Input load(const RunConfig& c) {
  if (c.model) return model_by_name(*c.model);
  if (c.inputs.empty()) throw UsageError("missing input file");
  const io::Json j = io::read_json(c.inputs.front());
  if (io::is_gfrob_document(j)) return io::gfrob_from_json(j);
  return io::frobenius_from_json(j);
}

bool has_twist(const RunConfig& c) { return c.lambda || c.cocycle || c.super; }

GFrobeniusAlgebra apply_twists(GFrobeniusAlgebra x, const RunConfig& c) {
  if (c.lambda) {
    const Scalar lambda = Scalar::parse(*c.lambda);
    if (lambda.is_zero()) throw UsageError("--lambda must be nonzero");
    x = qw_twist(x, lambda);
  }
  if (c.cocycle) {
    const Cocycle2 alpha = io::cocycle_from_json(io::read_json(*c.cocycle));
    x = twist(x, alpha, SuperTwist::trivial(x.group()));
  }
  if (c.super) {
    const int n = x.group().symmetric_degree();
    if (n == 0) throw UsageError("--super needs an S_n-algebra");
    x = twist(x, Cocycle2::trivial(x.group()), sign_supertwist(n));
  }
  return x;
}

GFrobeniusAlgebra to_galgebra(Input in, const RunConfig& c) {
  if (auto* x = std::get_if<GFrobeniusAlgebra>(&in)) {
    if (c.n) throw UsageError("--n applies to base algebra documents only");
    return apply_twists(std::move(*x), c);
  }
  if (!c.n) throw UsageError("a base algebra needs --n to form its symmetric product");
  if (*c.n < 1) throw UsageError("--n must be positive");
  SymprodOptions options;
  options.jobs = c.jobs;
  if (c.budget) options.budget = *c.budget;
  SymmetricProduct sp(std::get<FrobeniusAlgebra>(std::move(in)), *c.n);
  return apply_twists(sp.build(options), c);
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out)
    io::write_text(*c.out, text);
  else
    out << text;
}

void print_report(const RunConfig& c, const Report& r, std::ostream& out) {
  if (c.json)
    out << io::report_jsonl(r);
  else
    out << r.text();
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  Input in = load(c);
  if (std::holds_alternative<FrobeniusAlgebra>(in) && !c.n) {
    if (has_twist(c)) throw UsageError("twists need --n for a base algebra");
    const Report r = verify(std::get<FrobeniusAlgebra>(in));
    print_report(c, r, out);
    return r.passed() ? kPass : kFailure;
  }
  const GFrobeniusAlgebra x = to_galgebra(std::move(in), c);
  VerifyOptions options;
  options.jobs = c.jobs;
  if (c.budget) options.budget = *c.budget;
  const Report r = verify_axioms(x, options);
  print_report(c, r, out);
  return r.passed() ? kPass : kFailure;
}

int cmd_symprod(const RunConfig& c, std::ostream& out) {
  Input in = load(c);
  if (!std::holds_alternative<FrobeniusAlgebra>(in)) throw UsageError("symprod needs a base algebra document");
  emit(c, io::dump(io::to_json(to_galgebra(std::move(in), c))), out);
  return kPass;
}

int cmd_mult(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() != 3 && !(c.model && c.inputs.size() == 2))
    throw UsageError("mult needs an algebra and two elements");
  const GFrobeniusAlgebra x = to_galgebra(load(c), c);
  const std::size_t first = c.model ? 0 : 1;
  const SectorElement a = io::parse_element(x, c.inputs[first]);
  const SectorElement b = io::parse_element(x, c.inputs[first + 1]);
  const SectorElement p = x.multiply(a, b);
  out << format_element(x, p.sector, p.coeffs) << "\n";
  return kPass;
}

int cmd_twist(const RunConfig& c, std::ostream& out) {
  if (!has_twist(c)) throw UsageError("twist needs --lambda, --cocycle or --super");
  emit(c, io::dump(io::to_json(to_galgebra(load(c), c))), out);
  return kPass;
}

int cmd_invariants(const RunConfig& c, std::ostream& out) {
  const GFrobeniusAlgebra x = to_galgebra(load(c), c);
  const InvariantAlgebra inv = invariants(x);
  const auto dims = inv.class_dims();
  std::optional<PoincareData> poly;
  if (c.poincare) {
    if (c.shift == "standard")
      poly = shifted_poincare(x, standard_shifts(x, c.copies), true);
    else
      poly = shifted_poincare(x, zero_shifts(x), true);
  }
  if (c.json) {
    io::Json j;
    j["algebra"] = x.name();
    j["total"] = inv.dim();
    io::Json classes = io::Json::array();
    for (std::size_t k = 0; k < inv.classes.size(); ++k) {
      io::Json row{{"representative", x.group().label(inv.classes[k].front())},
                   {"size", inv.classes[k].size()},
                   {"dim", dims[k]}};
      if (poly) row["poincare"] = poly->per_class[k].str();
      classes.push_back(std::move(row));
    }
    j["classes"] = classes;
    j["metric_degenerate"] = inv.metric_degenerate;
    if (poly) j["poincare"] = poly->total.str();
    out << j.dump() << "\n";
    return kPass;
  }
  out << "invariants of " << x.name() << "\n";
  for (std::size_t k = 0; k < inv.classes.size(); ++k) {
    out << "  class " << x.group().label(inv.classes[k].front()) << " (size " << inv.classes[k].size()
        << "): " << dims[k];
    if (poly) out << "  " << poly->per_class[k].str();
    out << "\n";
  }
  out << "total: " << inv.dim() << "\n";
  if (inv.metric_degenerate) out << "restricted pairing: degenerate\n";
  if (poly) out << "poincare: " << poly->total.str() << "\n";
  return kPass;
}

int cmd_export(const RunConfig& c, std::ostream& out) {
  Input in = load(c);
  if (std::holds_alternative<FrobeniusAlgebra>(in) && !c.n && !has_twist(c)) {
    emit(c, io::dump(io::to_json(std::get<FrobeniusAlgebra>(in))), out);
    return kPass;
  }
  emit(c, io::dump(io::to_json(to_galgebra(std::move(in), c))), out);
  return kPass;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.shift != "none" && config.shift != "standard") throw UsageError("--shift must be none or standard");
    if (config.copies < 1) throw UsageError("--copies must be positive");
    if (config.subcommand == "verify") return cmd_verify(config, out);
    if (config.subcommand == "symprod") return cmd_symprod(config, out);
    if (config.subcommand == "mult") return cmd_mult(config, out);
    if (config.subcommand == "twist") return cmd_twist(config, out);
    if (config.subcommand == "invariants") return cmd_invariants(config, out);
    if (config.subcommand == "export") return cmd_export(config, out);
    throw UsageError("unknown subcommand '" + config.subcommand + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const SingularMatrix& e) {
    err << "failure: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact G-Frobenius algebras, symmetric products and their twists", "orbifrob"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--n", c.n, "Symmetric power of a base algebra");
    s->add_option("--lambda", c.lambda, "Twist by the normalized S_n cocycle with this value, p/q");
    s->add_option("--cocycle", c.cocycle, "Twist by a cocycle document");
    s->add_flag("--super", c.super, "Apply the sign super twist");
    s->add_option("--model", c.model, "Built-in base algebra: k, dual_numbers, surface");
    s->add_option("--jobs", c.jobs, "Threads; 0 uses the OpenMP default");
    s->add_option("--budget", c.budget, "Work limit for building and verifying");
  };

  auto* verify_cmd = app.add_subcommand("verify", "Check the axioms of an algebra document");
  verify_cmd->add_option("file", c.inputs, "Algebra or G-algebra document");
  verify_cmd->add_flag("--json", c.json, "One JSON object per axiom");
  add_common(verify_cmd);

  auto* symprod_cmd = app.add_subcommand("symprod", "Build the symmetric product of a base algebra");
  symprod_cmd->add_option("file", c.inputs, "Base algebra document");
  symprod_cmd->add_option("--out", c.out, "Output path");
  add_common(symprod_cmd);

  auto* mult_cmd = app.add_subcommand("mult", "Multiply two homogeneous elements");
  mult_cmd->add_option("args", c.inputs, "Algebra document, then two elements such as 1@(1 2)");
  add_common(mult_cmd);

  auto* twist_cmd = app.add_subcommand("twist", "Twist a G-algebra");
  twist_cmd->add_option("file", c.inputs, "G-algebra document");
  twist_cmd->add_option("--out", c.out, "Output path");
  add_common(twist_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "Dimensions of the invariant subalgebra");
  inv_cmd->add_option("file", c.inputs, "G-algebra document");
  inv_cmd->add_flag("--poincare", c.poincare, "Print the shifted Poincare polynomial");
  inv_cmd->add_option("--shift", c.shift, "none or standard")->check(CLI::IsMember({"none", "standard"}));
  inv_cmd->add_option("--copies", c.copies, "Multiplicity of the permutation representation");
  inv_cmd->add_flag("--json", c.json, "JSON output");
  add_common(inv_cmd);

  auto* export_cmd = app.add_subcommand("export", "Write a canonical document");
  export_cmd->add_option("file", c.inputs, "Algebra or G-algebra document");
  export_cmd->add_option("--out", c.out, "Output path");
  add_common(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return execute(c, out, err);
}

}  // namespace orbifrob::cli
