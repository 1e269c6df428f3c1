#include "cyclofix/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclofix/cosets.hpp"
#include "cyclofix/decimation.hpp"
#include "cyclofix/error.hpp"
#include "cyclofix/fixedpoints.hpp"
#include "cyclofix/ratfunc.hpp"
#include "cyclofix/serialize.hpp"

namespace cyclofix::cli {

namespace {

struct Params {
  long s = 0;
  long t = 0;
  long r = 0;
  long n = 0;
  long k = 1;
  long N = 20;
  long max_r = 0;
  std::string expr;
  std::string format = "text";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<long>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string transport_note(long u) {
  return "transport: x^" + std::to_string(-u) + " times the elements below\n";
}

void emit(std::ostream& out, const Params& p, const Json& json, const std::string& text) {
  if (p.format == "json") {
    out << json.dump(2) << '\n';
  } else {
    out << text;
  }
}

void cmd_omega(const Params& p, std::ostream& out) {
  const OmegaTable table = omega_enumerate(p.s, p.t, p.max_r);
  if (p.format == "csv") {
    out << omega_csv(table);
    return;
  }
  std::string text;
  for (long r : table.members) text += std::to_string(r) + '\n';
  emit(out, p, table, text);
}

void cmd_coset(const Params& p, std::ostream& out) {
  const CosetRecord rec = coset(p.s, p.r, p.n);
  const std::string text = "rep: " + std::to_string(rec.rep) + "\nord: " + std::to_string(rec.ord) +
                           "\nmembers: " + join(rec.members, " ") + '\n';
  emit(out, p, rec, text);
}

void cmd_reps(const Params& p, std::ostream& out) {
  const std::vector<long> reps = coset_reps(p.s, p.r);
  std::string text;
  for (long n : reps) text += std::to_string(n) + '\n';
  emit(out, p, Json{{"s", p.s}, {"r", p.r}, {"reps", reps}}, text);
}

void require_step(const Params& p) {
  if (p.s < 2) throw UsageError("-s must be at least 2");
}

void cmd_psi(const Params& p, std::ostream& out) {
  require_step(p);
  if (p.t < 0) throw UsageError("-t must be nonnegative for psi");
  const PsiElement e = psi(p.s, p.t, p.r, p.n);
  const std::string text = e.key().str() + "  " + canonical_text(e.reduced) +
                           "\nreduced: " + fraction_text(e.reduced) + '\n';
  emit(out, p, e, text);
}

void cmd_basis(const Params& p, std::ostream& out) {
  require_step(p);
  const FixedBasis b = basis(p.s, p.t, p.max_r);
  std::string text;
  if (b.u != 0) text += transport_note(b.u);
  for (const PsiElement& e : b.elements) text += e.key().str() + "  " + canonical_text(e.reduced) + '\n';
  emit(out, p, b, text);
}

void cmd_check(const Params& p, std::ostream& out) {
  const RationalFunction R = parse_expression(p.expr);
  const bool fixed = is_fixed(R, p.s, p.t);
  const Json json{{"s", p.s}, {"t", p.t}, {"expr", R}, {"fixed", fixed}};
  emit(out, p, json, std::string("fixed: ") + (fixed ? "true" : "false") + '\n');
}

void cmd_decompose(const Params& p, std::ostream& out) {
  require_step(p);
  const RationalFunction R = parse_expression(p.expr);
  const Decomposition d = decompose(R, p.s, p.t);
  std::string text;
  if (d.u != 0) text += transport_note(d.u);
  for (const auto& [key, coeff] : d.combo) text += key.str() + "  " + coefficient_text(coeff) + '\n';
  text += std::string("residual_ok: ") + (d.residual_ok ? "true" : "false") + '\n';
  emit(out, p, d, text);
}

void cmd_apply(const Params& p, std::ostream& out) {
  if (p.k < 0) throw UsageError("-k must be nonnegative");
  const RationalFunction R = parse_expression(p.expr);
  const RationalFunction image = phi_rational_iterate(R, p.s, p.t, p.k);
  const std::string text = canonical_text(image);
  const Json json{{"s", p.s}, {"t", p.t}, {"k", p.k}, {"input", R}, {"result", image},
                  {"text", text}};
  emit(out, p, json, text + '\n');
}

void cmd_expand(const Params& p, std::ostream& out) {
  if (p.N < 0) throw UsageError("-N must be nonnegative");
  const RationalFunction R = parse_expression(p.expr);
  const LaurentPrefix a = expand_series(R, p.N);
  std::string text;
  for (long i = a.n_min; i <= a.n_max(); ++i) {
    text += std::to_string(i) + ": " + coefficient_text(a.at(i)) + '\n';
  }
  emit(out, p, a, text);
}

void apply_conductor_limit() {
  const char* env = std::getenv("CYCLOFIX_MAX_CONDUCTOR");
  if (env == nullptr || *env == '\0') {
    set_max_conductor(10000);
    return;
  }
  char* end = nullptr;
  const long limit = std::strtol(env, &end, 10);
  if (*end != '\0' || limit < 1) {
    throw UsageError(std::string("CYCLOFIX_MAX_CONDUCTOR must be a positive integer, got '") + env +
                     "'");
  }
  set_max_conductor(limit);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Params p;
  CLI::App app{"Fixed points of coefficient-decimation operators on rational functions",
               "cyclofix"};
  app.require_subcommand(1);

  std::function<void(const Params&, std::ostream&)> action;
  const auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    const bool csv = std::string(name) == "omega";
    sub->add_option("--format", p.format, "Output format")
        ->check(csv ? CLI::IsMember({"text", "json", "csv"}) : CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    return sub;
  };

  CLI::App* omega = add("omega", "Distinguished integers r <= max for (s, t)", cmd_omega);
  omega->add_option("-s", p.s, "Decimation step")->required();
  omega->add_option("-t", p.t, "Decimation offset")->required();
  omega->add_option("--max", p.max_r, "Largest r")->required();

  CLI::App* coset_cmd = add("coset", "Cyclotomic coset of n modulo r under s", cmd_coset);
  coset_cmd->add_option("-s", p.s, "Multiplier")->required();
  coset_cmd->add_option("-r", p.r, "Modulus")->required();
  coset_cmd->add_option("-n", p.n, "Element")->required();

  CLI::App* reps = add("reps", "Canonical coset representatives of units mod r", cmd_reps);
  reps->add_option("-s", p.s, "Multiplier")->required();
  reps->add_option("-r", p.r, "Modulus")->required();

  CLI::App* psi_cmd = add("psi", "Basis element psi_{s,t,r,n}", cmd_psi);
  psi_cmd->add_option("-s", p.s, "Decimation step")->required();
  psi_cmd->add_option("-t", p.t, "Decimation offset")->required();
  psi_cmd->add_option("-r", p.r, "Pole order")->required();
  psi_cmd->add_option("-n", p.n, "Coset representative")->required();

  CLI::App* basis_cmd = add("basis", "Fixed-point basis up to pole order max", cmd_basis);
  basis_cmd->add_option("-s", p.s, "Decimation step")->required();
  basis_cmd->add_option("-t", p.t, "Decimation offset")->required();
  basis_cmd->add_option("--max", p.max_r, "Largest pole order")->required();

  CLI::App* check = add("check", "Decide whether an expression is fixed", cmd_check);
  check->add_option("-s", p.s, "Decimation step")->required();
  check->add_option("-t", p.t, "Decimation offset")->required();
  check->add_option("expr", p.expr, "Rational function in x")->required();

  CLI::App* decompose_cmd = add("decompose", "Coordinates of a fixed point in the basis",
                                cmd_decompose);
  decompose_cmd->add_option("-s", p.s, "Decimation step")->required();
  decompose_cmd->add_option("-t", p.t, "Decimation offset")->required();
  decompose_cmd->add_option("expr", p.expr, "Rational function in x")->required();

  CLI::App* apply = add("apply", "Image of an expression under phi_{s,t}^k", cmd_apply);
  apply->add_option("-s", p.s, "Decimation step")->required();
  apply->add_option("-t", p.t, "Decimation offset")->required();
  apply->add_option("-k", p.k, "Iterate count")->capture_default_str();
  apply->add_option("expr", p.expr, "Rational function in x")->required();

  CLI::App* expand = add("expand", "Laurent coefficients up to x^N", cmd_expand);
  expand->add_option("-N", p.N, "Truncation order")->capture_default_str();
  expand->add_option("expr", p.expr, "Rational function in x")->required();

  std::vector<const char*> argv{"cyclofix"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_conductor_limit();
    action(p, out);
  } catch (const NotAFixedPoint& e) {
    err << e.name() << ": " << e.what() << '\n';
    if (!e.detail().empty()) err << "  " << e.detail() << '\n';
    return 1;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cyclofix::cli
