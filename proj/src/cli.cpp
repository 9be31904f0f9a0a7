// Copyright 2026 The pivotforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pivotforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pivotforge/engine.hpp"
#include "pivotforge/io.hpp"
#include "pivotforge/objectives.hpp"
#include "pivotforge/sat_gadget.hpp"
#include "pivotforge/structure.hpp"
#include "pivotforge/verify.hpp"

namespace pivotforge
{
namespace
{

// Enumeration guards; PIVOTFORGE_MAX_N or --max-n lifts them.
struct Caps
{
  std::size_t uso = 10;
  std::size_t runs = 20;
  std::size_t sat = 24;
};

Caps caps_from_env()
{
  Caps caps;
  if (const char * env = std::getenv("PIVOTFORGE_MAX_N"); env != nullptr && *env != '\0') {
    char * end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') {
      caps.uso = caps.runs = caps.sat = static_cast<std::size_t>(v);
    }
  }
  return caps;
}

// Raised for invalid arguments detected after CLI11 parsing.
struct UsageError
{
  std::string message;
};

void check_n(std::size_t n, std::size_t cap, const std::optional<std::size_t> & override_cap, const char * what)
{
  const std::size_t limit = override_cap.value_or(cap);
  if (n < 1) {
    throw UsageError{std::string(what) + " must be at least 1"};
  }
  if (n > limit) {
    throw UsageError{
      std::string(what) + "=" + std::to_string(n) + " exceeds the cap of " + std::to_string(limit) +
      " (raise it with --max-n or PIVOTFORGE_MAX_N)"};
  }
}

void write_text(const std::string & path, const std::string & text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw UsageError{"cannot open '" + path + "' for writing"};
  }
  f << text;
}

std::string approx(const Rational & v)
{
  std::ostringstream os;
  os << std::setprecision(17) << v.to_double();
  return os.str();
}

struct RunOptions
{
  std::size_t n = 0;
  std::string rule = "lowest-index";
  std::uint64_t seed = 0;
  std::optional<std::size_t> pad_to;
  std::string out;
  std::string format = "json";
  bool approx = false;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_iter;
};

int cmd_run(const RunOptions & o, const Caps & caps, std::ostream & out, std::ostream & err)
{
  check_n(o.n, caps.runs, o.max_n, "--n");
  const std::size_t dim = o.pad_to.value_or(o.n);
  if (o.pad_to) {
    check_n(dim, caps.runs, o.max_n, "--pad-to");
    if (dim < o.n) {
      throw UsageError{"--pad-to must be at least --n"};
    }
  }
  const BoxProgram program(dim);
  OraclePtr objective = std::make_shared<LowerBoundPolynomial>(o.n);
  if (o.pad_to) {
    objective = pad(objective, dim);
  }
  auto rule = make_rule(o.rule, o.seed);
  const Trajectory t = active_set_run(program, *objective, program.origin(), *rule, o.max_iter);

  if (!o.out.empty()) {
    if (o.format == "json") {
      write_text(o.out, trajectory_to_json(program, t, o.rule).dump(2) + "\n");
    } else {
      write_text(o.out, std::string(kSummaryCsvHeader) + "\n" + summary_csv_row(o.n, o.rule, program, t) + "\n");
    }
  }
  const Json final_id = vertex_id_or_null(program, t.final_point());
  out << "n=" << o.n << " rule=" << o.rule << " iterations=" << t.iterations()
      << " final=" << (final_id.is_null() ? std::string("none") : std::to_string(final_id.get<VertexId>()))
      << " value=" << t.final_value().to_string();
  if (o.approx) {
    out << " value_approx=" << approx(t.final_value()) << " (lossy)";
  }
  out << "\n";
  if (t.outcome == Outcome::kError) {
    err << "engine stopped: " << (t.error ? to_string(*t.error) : std::string_view("ERROR")) << ": " << t.error_message
        << "\n";
    return kExitViolation;
  }
  return kExitPass;
}

struct VerifyOptions
{
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t clauses = 20;
  std::optional<std::size_t> max_n;
};

int report(const std::string & check, const std::string & scope, const CheckReport & r, std::ostream & out)
{
  if (r.ok) {
    out << "PASS " << check << " " << scope << ": " << r.summary << "\n";
    return kExitPass;
  }
  out << "FAIL " << check << " " << scope << ": " << r.summary << "\n";
  out << Json{{"check", check}, {"witness", r.witness}}.dump() << "\n";
  return kExitViolation;
}

struct ExportOptions
{
  std::size_t n = 0;
  std::string out;
  std::optional<std::size_t> max_n;
};

void emit_json(const Json & j, const std::string & path, std::ostream & out)
{
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_text(path, j.dump(2) + "\n");
  }
}

struct ReduceOptions
{
  std::string input;
  std::string out;
  bool check = false;
  std::optional<std::size_t> max_n;
};

int cmd_reduce(const ReduceOptions & o, const Caps & caps, std::ostream & out, std::ostream & err)
{
  std::ifstream in(o.input, std::ios::binary);
  if (!in) {
    throw UsageError{"cannot read '" + o.input + "'"};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  CnfFormula formula;
  try {
    formula = parse_dimacs(buffer.str());
  } catch (const ParseError & e) {
    err << o.input << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (formula.n_vars > o.max_n.value_or(caps.sat)) {
    throw UsageError{
      std::to_string(formula.n_vars) + " variables exceed the cap of " + std::to_string(o.max_n.value_or(caps.sat))};
  }
  const MultiPoly p = reduce(formula);
  out << "variables=" << formula.n_vars << " clauses=" << formula.clauses.size() << " degree=" << p.total_degree() << "\n";
  emit_json(polynomial_to_json(p), o.out, out);
  if (!o.check) {
    return kExitPass;
  }
  const SatResult sat = brute_force_sat(formula);
  const BruteForceMax max = brute_force_max(p, formula.n_vars);
  out << "verdict=" << (sat.satisfiable ? "SAT" : "UNSAT") << " max=" << max.value.to_string() << "\n";
  if ((max.value == Rational(0)) != sat.satisfiable) {
    out << Json{{"check", "reduce"}, {"witness", {{"argmax", max.argmax}, {"max", max.value.to_string()}, {"satisfiable", sat.satisfiable}}}}.dump()
        << "\n";
    return kExitViolation;
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  const Caps caps = caps_from_env();
  CLI::App app{"pivotforge: exact certification of a worst-case construction for the active-set method on [0,1]^n"};
  app.require_subcommand(1);
  app.name(args.empty() ? "pivotforge" : args.front());

  auto add_max_n = [](CLI::App * cmd, std::optional<std::size_t> & target) {
    cmd->add_option("--max-n", target, "Override the enumeration cap for this command");
  };

  // run
  RunOptions run_opts;
  auto * run = app.add_subcommand(
    "run",
    "Run the active-set method on F_n from the origin. F_n needs exactly 2^n - 1 iterations under every pivot rule; "
    "with --pad-to N the same count holds inside [0,1]^N.");
  run->add_option("--n", run_opts.n, "Dimension of F_n")->required();
  run->add_option("--rule", run_opts.rule, "Pivot rule")->check(CLI::IsMember(builtin_rule_names()));
  run->add_option("--seed", run_opts.seed, "Seed for the seeded-random rule");
  run->add_option("--pad-to", run_opts.pad_to, "Ambient dimension; F_n reads only the first n coordinates");
  run->add_option("--out", run_opts.out, "Write the trajectory (json) or summary (csv) here");
  run->add_option("--format", run_opts.format, "Output file format")->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--approx", run_opts.approx, "Also print a decimal value (lossy)");
  run->add_option("--max-iter", run_opts.max_iter, "Iteration limit (default 2^(n+1))");
  add_max_n(run, run_opts.max_n);

  // verify
  auto * verify = app.add_subcommand("verify", "Certify one claim by exhaustive or randomized checking");
  verify->require_subcommand(1);
  VerifyOptions vopts;
  std::string chosen;
  struct CheckDef
  {
    const char * name;
    const char * claim;
    std::size_t default_n;
    std::size_t default_trials;
  };
  const std::vector<CheckDef> checks{
    {"uniqueness",
     "Claim: every vertex of [0,1]^n other than e^n has exactly one improving dimension; the gradient-sign condition "
     "and the pp/S parity condition select the same one, and e^n has none.",
     10, 0},
    {"gradient",
     "Claim: at every vertex the closed-form k-th partial derivative of F_n equals the dual-number derivative.", 10, 0},
    {"path",
     "Claim: following improving dimensions from the origin visits all 2^n vertices (a Hamiltonian path) in the "
     "reflected Gray code order, with values 0, 1, ..., 2^n - 1, ending at e^n; it equals the engine trajectory and "
     "its second half mirrors the first.",
     10, 0},
    {"constancy",
     "Claim: moving along the improving edge does not change the k-th partial derivative, so the line search always "
     "reaches the next vertex (checked at mu = 0, 1/10, ..., 1 and via the edge polynomial).",
     10, 0},
    {"equivalence",
     "Claim: on linear programs over the cube with distinct vertex values, the active-set method computes the same "
     "intermediate vertices as the simplex method under a shared pivot rule.",
     8, 100},
    {"uso",
     "Claim: the orientation induced by F_n has exactly one sink in every face (a unique sink orientation), is "
     "decomposable, and each face with free coordinates I is combed in max(I).",
     8, 0},
    {"sink",
     "Claim: on this decomposable orientation the sink is found with at most 2n value queries by fixing coordinates "
     "from n down to 1.",
     12, 0},
    {"sat",
     "Claim: reducing a 3-CNF formula gives a polynomial of degree at most 3 whose value at each 0/1 assignment is "
     "minus the number of violated clauses; its maximum over {0,1}^n is 0 exactly when the formula is satisfiable. "
     "Here --n bounds the number of variables.",
     12, 200},
  };
  std::vector<CLI::App *> check_cmds;
  for (const auto & def : checks) {
    auto * cmd = verify->add_subcommand(def.name, def.claim);
    cmd->add_option("--n", vopts.n, "Dimension (default " + std::to_string(def.default_n) + ")");
    cmd->add_option("--trials", vopts.trials, "Random trials (default " + std::to_string(def.default_trials) + ")");
    cmd->add_option("--seed", vopts.seed, "Random seed");
    if (std::string(def.name) == "sat") {
      cmd->add_option("--clauses", vopts.clauses, "Maximum clauses per formula");
    }
    add_max_n(cmd, vopts.max_n);
    check_cmds.push_back(cmd);
  }

  // export
  ExportOptions eopts;
  auto * exp = app.add_subcommand("export", "Write a JSON artifact");
  exp->require_subcommand(1);
  auto * exp_poly = exp->add_subcommand(
    "polynomial", "Expanded F_n as [{exponents, coefficient}] in graded-lex order; prints degree=<d>");
  auto * exp_orient = exp->add_subcommand("orientation", "Induced orientation as {vertex id: [outgoing coordinates]}");
  auto * exp_path = exp->add_subcommand("path", "Improving-walk vertex ids from the origin to e^n");
  for (auto * cmd : {exp_poly, exp_orient, exp_path}) {
    cmd->add_option("--n", eopts.n, "Dimension")->required();
    cmd->add_option("--out", eopts.out, "Output file (default: stdout)");
    add_max_n(cmd, eopts.max_n);
  }

  // reduce
  ReduceOptions ropts;
  auto * red = app.add_subcommand("reduce", "Reduce a DIMACS CNF file to its degree-3 polynomial");
  red->add_option("dimacs", ropts.input, "DIMACS CNF file")->required();
  red->add_option("--out", ropts.out, "Output file for the polynomial JSON (default: stdout)");
  red->add_flag("--check", ropts.check, "Also brute-force satisfiability and the maximum, and require they agree");
  add_max_n(red, ropts.max_n);

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) {
    rest.pop_back();  // program name
  }
  try {
    app.parse(rest);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(run_opts, caps, out, err);
    }
    if (red->parsed()) {
      return cmd_reduce(ropts, caps, out, err);
    }
    if (exp->parsed()) {
      if (exp_poly->parsed()) {
        check_n(eopts.n, caps.runs, eopts.max_n, "--n");
        const MultiPoly p = expand(eopts.n);
        out << "degree=" << p.total_degree() << "\n";
        emit_json(polynomial_to_json(p), eopts.out, out);
      } else if (exp_orient->parsed()) {
        check_n(eopts.n, caps.uso, eopts.max_n, "--n");
        emit_json(orientation_to_json(induce_orientation(LowerBoundPolynomial(eopts.n), eopts.n)), eopts.out, out);
      } else {
        check_n(eopts.n, caps.runs, eopts.max_n, "--n");
        emit_json(gray_path_to_json(hamiltonian_path(eopts.n)), eopts.out, out);
      }
      return kExitPass;
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (!check_cmds[i]->parsed()) {
        continue;
      }
      const std::string name = checks[i].name;
      const std::size_t n = vopts.n == 0 ? checks[i].default_n : vopts.n;
      const std::size_t trials = vopts.trials == 0 ? checks[i].default_trials : vopts.trials;
      const std::string scope = "n=" + std::to_string(n) + (trials ? " trials=" + std::to_string(trials) : "");
      try {
        if (name == "uniqueness") {
          check_n(n, caps.runs, vopts.max_n, "--n");
          return report(name, scope, verify_uniqueness(n), out);
        }
        if (name == "gradient") {
          check_n(n, caps.runs, vopts.max_n, "--n");
          return report(name, scope, verify_gradient(n), out);
        }
        if (name == "path") {
          check_n(n, caps.runs, vopts.max_n, "--n");
          return report(name, scope, verify_path(n), out);
        }
        if (name == "constancy") {
          check_n(n, caps.runs, vopts.max_n, "--n");
          return report(name, scope, verify_constancy(n), out);
        }
        if (name == "equivalence") {
          check_n(n, caps.runs, vopts.max_n, "--n");
          return report(name, scope, verify_equivalence(n, trials, vopts.seed), out);
        }
        if (name == "uso") {
          check_n(n, caps.uso, vopts.max_n, "--n");
          return report(name, scope, verify_uso(n), out);
        }
        if (name == "sink") {
          check_n(n, caps.runs, vopts.max_n, "--n");
          return report(name, scope, verify_sink(n), out);
        }
        check_n(n, caps.sat, vopts.max_n, "--n");
        return report(name, scope, verify_sat(trials, vopts.seed, n, vopts.clauses), out);
      } catch (const Error & e) {
        // A library error inside a check (for example AMBIGUOUS) is itself a violation.
        return report(name, scope, CheckReport{false, e.what(), Json{{"error", e.what()}}}, out);
      }
    }
  } catch (const UsageError & e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error & e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kInvalidArgument ||
               e.code() == ErrorCode::kTooLarge
             ? kExitUsage
             : kExitViolation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace pivotforge
