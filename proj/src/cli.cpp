#include "nls/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nls/closure.hpp"
#include "nls/errors.hpp"
#include "nls/integrators.hpp"
#include "nls/polytope.hpp"
#include "nls/report_io.hpp"
#include "nls/superposition.hpp"
#include "nls/system_io.hpp"

namespace nls {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string exponent_str(const ExponentVector& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

std::string field_str(const VectorField& x,
                      const std::vector<std::string>& names) {
  std::string out = "(";
  for (int i = 0; i < x.dimension(); ++i) {
    if (i) out += ", ";
    out += to_string(x.component(i), names);
  }
  return out + ")";
}

struct CheckOptions {
  std::string file;
  bool as_json = false;
  bool force_one_dim = false;
  bool force_general = false;
  int max_rounds_flag = 0;
  bool max_rounds_set = false;
};

// Precedence: --max-rounds flag, then NLS_MAX_ROUNDS, then the default.
int resolve_max_rounds(const CheckOptions& opt, std::ostream& err,
                       int& rounds) {
  if (opt.max_rounds_set) {
    rounds = opt.max_rounds_flag;
    return 0;
  }
  if (const char* env = std::getenv("NLS_MAX_ROUNDS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      err << "NLS_MAX_ROUNDS must be a positive integer, got '" << env
          << "'\n";
      return 2;
    }
    rounds = static_cast<int>(v);
    return 0;
  }
  rounds = kDefaultMaxRounds;
  return 0;
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::FiniteDimensional:
      return 0;
    case Verdict::InfiniteDimensional:
      return 10;
    case Verdict::BudgetExceeded:
      return 11;
  }
  return 1;
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  SystemDocument doc;
  std::vector<VectorField> fields;
  try {
    doc = load_system(opt.file);
    fields = doc.to_fields();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  int rounds = 0;
  if (int rc = resolve_max_rounds(opt, err, rounds)) return rc;
  const bool one_dim =
      opt.force_one_dim || (doc.dimension() == 1 && !opt.force_general);
  DecisionReport rep;
  try {
    rep = one_dim ? check_one_dim(fields, rounds)
                  : check_general(fields, rounds);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  if (opt.as_json) {
    out << report_to_json(rep, doc).dump(2) << "\n";
  } else {
    switch (rep.verdict) {
      case Verdict::FiniteDimensional:
        out << "FINITE, dim " << *rep.dimension << "\n";
        break;
      case Verdict::InfiniteDimensional: {
        const WitnessPair& w = *rep.witness;
        out << "INFINITE (witness v=" << exponent_str(w.v)
            << ", u=" << exponent_str(w.u) << ")\n"
            << "found at round " << rep.witness_round
            << " between operators " << w.i << " and " << w.j << "\n";
        break;
      }
      case Verdict::BudgetExceeded:
        out << "UNDECIDED after " << rep.rounds_run
            << " rounds (span dimension " << *rep.dimension << " so far)\n";
        break;
    }
  }
  return verdict_exit_code(rep.verdict);
}

int run_bracket(const std::string& file, int i, int j, std::ostream& out,
                std::ostream& err) {
  SystemDocument doc;
  std::vector<VectorField> fields;
  try {
    doc = load_system(file);
    fields = doc.to_fields();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  const int n = static_cast<int>(fields.size());
  if (i < 0 || i >= n || j < 0 || j >= n) {
    err << "operator index out of range (document has " << n
        << " operators)\n";
    return 2;
  }
  out << field_str(lie_bracket(fields[i], fields[j]), doc.variables) << "\n";
  return 0;
}

int run_polytope(const std::string& file, int op, std::ostream& out,
                 std::ostream& err) {
  SystemDocument doc;
  std::vector<VectorField> fields;
  try {
    doc = load_system(file);
    fields = doc.to_fields();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  if (op < 0 || op >= static_cast<int>(fields.size())) {
    err << "operator index out of range (document has " << fields.size()
        << " operators)\n";
    return 2;
  }
  try {
    LatticePolytope hull = newton_polytope(fields[op]);
    for (const auto& v : hull.vertices()) {
      out << exponent_str(v) << "\n";
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

struct ScalarIntegrateOptions {
  std::string a0 = "0", a1 = "0", a2 = "0";
  std::string x0, t0 = "0", h;
  int steps = 0;
  std::string scheme = "semi-implicit";
  std::string mode = "exact";
  std::string csv;
};

int emit_trajectory(const Trajectory& tr, const std::string& csv,
                    std::ostream& out, std::ostream& err, bool scalar_lines) {
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) {
      err << "cannot write '" << csv << "'\n";
      return 1;
    }
    write_csv(tr, f);
    out << "wrote " << tr.size() << " samples to " << csv << "\n";
    return 0;
  }
  if (!scalar_lines) {
    write_csv(tr, out);
    return 0;
  }
  const bool exact = tr.mode == "exact";
  for (std::size_t s = 1; s < tr.size(); ++s) {
    out << "t=" << to_string(tr.times[s]) << ", x="
        << (exact ? to_string(tr.exact_states[s][0])
                  : format_double(tr.float_states[s][0]))
        << "\n";
  }
  return 0;
}

int run_integrate_riccati(const ScalarIntegrateOptions& o, std::ostream& out,
                          std::ostream& err) {
  RiccatiCoefficients c;
  Rational x0, t0, h;
  try {
    c = RiccatiCoefficients{TimeExpression::parse(o.a0),
                            TimeExpression::parse(o.a1),
                            TimeExpression::parse(o.a2)};
    x0 = parse_rational(o.x0);
    t0 = parse_rational(o.t0);
    h = parse_rational(o.h);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  Trajectory tr;
  try {
    tr = riccati_integrate(c, t0, x0, h, o.steps, o.scheme, o.mode);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return emit_trajectory(tr, o.csv, out, err, /*scalar_lines=*/true);
}

struct MatrixIntegrateOptions {
  std::string file;
  std::string t0 = "0", h = "0", q = "1";
  int steps = 0;
  std::string mode = "exact";
  std::string csv;
};

MatrixRiccatiSystem read_matrix_document(const nlohmann::json& j,
                                         RationalMatrix& w0) {
  if (!j.is_object()) throw ParseError("matrix document must be an object");
  for (const char* key : {"n", "k"}) {
    if (!j.contains(key) || !j[key].is_number_integer() ||
        j[key].get<int>() < 1) {
      throw ParseError(std::string("'") + key + "' must be a positive integer");
    }
  }
  const int n = j["n"].get<int>();
  const int k = j["k"].get<int>();
  auto block = [&](const char* name, int rows, int cols) {
    std::vector<TimeExpression> entries;
    if (!j.contains(name)) {
      entries.assign(static_cast<std::size_t>(rows) * cols, TimeExpression());
      return entries;
    }
    const nlohmann::json& b = j[name];
    if (!b.is_array() || static_cast<int>(b.size()) != rows) {
      throw ParseError(std::string("block '") + name + "' must be " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const auto& row : b) {
      if (!row.is_array() || static_cast<int>(row.size()) != cols) {
        throw ParseError(std::string("block '") + name + "' must be " +
                         std::to_string(rows) + "x" + std::to_string(cols));
      }
      for (const auto& cell : row) {
        if (!cell.is_string()) {
          throw ParseError(std::string("block '") + name +
                           "' entries must be expression strings");
        }
        entries.push_back(TimeExpression::parse(cell.get<std::string>()));
      }
    }
    return entries;
  };
  MatrixRiccatiSystem sys{n, k, block("A", n, k), block("B", n, n),
                          block("C", k, k), block("D", k, n)};
  if (!j.contains("w0")) throw ParseError("'w0' matrix is required");
  const nlohmann::json& w = j["w0"];
  if (!w.is_array() || static_cast<int>(w.size()) != n) {
    throw ParseError("'w0' must be " + std::to_string(n) + "x" +
                     std::to_string(k));
  }
  w0 = RationalMatrix(n, k);
  for (int r = 0; r < n; ++r) {
    const nlohmann::json& row = w[r];
    if (!row.is_array() || static_cast<int>(row.size()) != k) {
      throw ParseError("'w0' must be " + std::to_string(n) + "x" +
                       std::to_string(k));
    }
    for (int c = 0; c < k; ++c) {
      if (!row[c].is_string()) {
        throw ParseError("'w0' entries must be rational strings");
      }
      w0.at(r, c) = parse_rational(row[c].get<std::string>());
    }
  }
  return sys;
}

int run_integrate_matrix(const MatrixIntegrateOptions& o, std::ostream& out,
                         std::ostream& err) {
  MatrixRiccatiSystem sys;
  RationalMatrix w0(1, 1);
  Rational t0, h, q;
  try {
    std::ifstream in(o.file);
    if (!in) throw Error("cannot open '" + o.file + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    sys = read_matrix_document(j, w0);
    t0 = parse_rational(o.t0);
    h = parse_rational(o.h);
    q = parse_rational(o.q);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  Trajectory tr;
  try {
    tr = matrix_riccati_integrate(sys, t0, w0, h, o.steps, q, o.mode);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return emit_trajectory(tr, o.csv, out, err, /*scalar_lines=*/false);
}

int run_cross_ratio(const std::vector<std::string>& files, std::ostream& out,
                    std::ostream& err) {
  std::vector<std::vector<std::pair<Rational, Rational>>> tracks;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) {
      err << "cannot open '" << path << "'\n";
      return 2;
    }
    try {
      tracks.push_back(read_scalar_csv(in));
    } catch (const Error& e) {
      err << path << ": " << e.what() << "\n";
      return 2;
    }
  }
  for (int i = 1; i < 4; ++i) {
    if (tracks[i].size() != tracks[0].size()) {
      err << "trajectories disagree in length\n";
      return 2;
    }
    for (std::size_t s = 0; s < tracks[0].size(); ++s) {
      if (tracks[i][s].first != tracks[0][s].first) {
        err << "trajectories disagree on the time grid at row "
            << std::to_string(s) << "\n";
        return 2;
      }
    }
  }
  if (tracks[0].empty()) {
    err << "trajectories are empty\n";
    return 2;
  }
  bool constant = true;
  Rational first;
  for (std::size_t s = 0; s < tracks[0].size(); ++s) {
    Rational r;
    try {
      r = cross_ratio(tracks[0][s].second, tracks[1][s].second,
                      tracks[2][s].second, tracks[3][s].second);
    } catch (const Error& e) {
      err << "row " << s << ": " << e.what() << "\n";
      return 1;
    }
    if (s == 0) {
      first = r;
    } else if (r != first) {
      constant = false;
    }
    out << "t=" << to_string(tracks[0][s].first) << ", ratio=" << to_string(r)
        << "\n";
  }
  out << (constant ? "constant at " + to_string(first) : "not constant")
      << "\n";
  return 0;
}

int run_verify_rule(const std::string& file, const std::string& rule,
                    int copies, std::ostream& out, std::ostream& err) {
  SystemDocument doc;
  std::vector<VectorField> fields;
  std::vector<std::string> names = {"x"};
  for (int i = 1; i <= copies; ++i) names.push_back("x" + std::to_string(i));
  RationalExpression candidate(LaurentPolynomial::zero(1),
                               LaurentPolynomial::constant(1, Rational(1)),
                               {"x"});
  try {
    doc = load_system(file);
    if (doc.dimension() != 1) {
      throw Error("rule verification needs a one-variable document");
    }
    fields = doc.to_fields();
    candidate = RationalExpression::parse(rule, names);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  RuleCheck res;
  try {
    res = verify_rule(candidate, fields, copies);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  if (res.pass) {
    out << "PASS: " << res.residual_numerators.size()
        << " residual numerators identically zero\n";
    return 0;
  }
  out << "FAIL\n";
  for (std::size_t i = 0; i < res.residual_numerators.size(); ++i) {
    if (!res.residual_numerators[i].is_zero()) {
      out << "generator " << i
          << " residual: " << to_string(res.residual_numerators[i], names)
          << "\n";
    }
  }
  return 1;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "closure checks for polynomial operator algebras and "
      "superposition-compatible Riccati steppers"};
  app.name("nls");
  // The short -h is freed up for the step-size option of `integrate`.
  app.set_help_flag("--help", "print this help message and exit");
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);

  CheckOptions copt;
  auto* check = app.add_subcommand(
      "check", "decide whether the operators close into a finite algebra");
  check->add_option("file", copt.file, "system document (JSON)")->required();
  check->add_flag("--json", copt.as_json, "emit the full JSON report");
  auto* one_dim_flag = check->add_flag("--one-dim", copt.force_one_dim,
                                       "force the line-degree decider");
  auto* general_flag =
      check->add_flag("--general", copt.force_general,
                      "force the vertex-pair decider even on the line");
  one_dim_flag->excludes(general_flag);
  auto* rounds_opt =
      check
          ->add_option("--max-rounds", copt.max_rounds_flag,
                       "commutator round cap (overrides NLS_MAX_ROUNDS)")
          ->check(CLI::PositiveNumber);

  std::string bracket_file;
  int bracket_i = 0, bracket_j = 0;
  auto* bracket =
      app.add_subcommand("bracket", "print the commutator of two operators");
  bracket->add_option("file", bracket_file, "system document (JSON)")
      ->required();
  bracket->add_option("--i", bracket_i, "first operator index")->required();
  bracket->add_option("--j", bracket_j, "second operator index")->required();

  std::string polytope_file;
  int polytope_op = 0;
  auto* polytope_cmd = app.add_subcommand(
      "polytope", "print the support-hull vertices of one operator");
  polytope_cmd->add_option("file", polytope_file, "system document (JSON)")
      ->required();
  polytope_cmd->add_option("--op", polytope_op, "operator index")->required();

  auto* integrate =
      app.add_subcommand("integrate", "advance a quadratic differential system");
  integrate->require_subcommand(1);

  ScalarIntegrateOptions sopt;
  auto* scalar_cmd =
      integrate->add_subcommand("riccati", "scalar quadratic equation");
  scalar_cmd->add_option("--a0", sopt.a0, "constant coefficient (in t)");
  scalar_cmd->add_option("--a1", sopt.a1, "linear coefficient (in t)");
  scalar_cmd->add_option("--a2", sopt.a2, "quadratic coefficient (in t)");
  scalar_cmd->add_option("--x0", sopt.x0, "initial value")->required();
  scalar_cmd->add_option("--t0", sopt.t0, "initial time");
  scalar_cmd->add_option("--h", sopt.h, "step size")->required();
  scalar_cmd->add_option("--steps", sopt.steps, "number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  scalar_cmd->add_option("--scheme", sopt.scheme,
                         "explicit or semi-implicit (default)");
  scalar_cmd->add_option("--mode", sopt.mode, "exact (default) or float");
  scalar_cmd->add_option("--csv", sopt.csv, "write samples to a CSV file");

  MatrixIntegrateOptions mopt;
  auto* matrix_cmd =
      integrate->add_subcommand("matrix", "matrix quadratic equation");
  matrix_cmd->add_option("file", mopt.file, "matrix system document (JSON)")
      ->required();
  matrix_cmd->add_option("--t0", mopt.t0, "initial time");
  matrix_cmd->add_option("--h", mopt.h, "grid offset");
  matrix_cmd->add_option("--q", mopt.q, "grid ratio (1 = uniform)");
  matrix_cmd->add_option("--steps", mopt.steps, "number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  matrix_cmd->add_option("--mode", mopt.mode, "exact (default) or float");
  matrix_cmd->add_option("--csv", mopt.csv, "write samples to a CSV file");

  std::vector<std::string> ratio_files;
  auto* ratio_cmd = app.add_subcommand(
      "cross-ratio", "pointwise ratio of four scalar CSV trajectories");
  ratio_cmd->add_option("files", ratio_files, "four CSV files")
      ->expected(4)
      ->required();

  std::string rule_file, rule_text;
  int rule_copies = 0;
  auto* rule_cmd = app.add_subcommand(
      "verify-rule",
      "check a candidate combination formula against prolonged operators");
  rule_cmd->add_option("file", rule_file, "system document (JSON)")
      ->required();
  rule_cmd->add_option("--rule", rule_text,
                       "candidate expression over x, x1, ..., xm")
      ->required();
  rule_cmd->add_option("--copies", rule_copies, "number of known solutions m")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    err << "run 'nls --help' for usage\n";
    return 2;
  }

  copt.max_rounds_set = rounds_opt->count() > 0;
  if (check->parsed()) return run_check(copt, out, err);
  if (bracket->parsed()) {
    return run_bracket(bracket_file, bracket_i, bracket_j, out, err);
  }
  if (polytope_cmd->parsed()) {
    return run_polytope(polytope_file, polytope_op, out, err);
  }
  if (integrate->parsed()) {
    if (scalar_cmd->parsed()) return run_integrate_riccati(sopt, out, err);
    if (matrix_cmd->parsed()) return run_integrate_matrix(mopt, out, err);
  }
  if (ratio_cmd->parsed()) return run_cross_ratio(ratio_files, out, err);
  if (rule_cmd->parsed()) {
    return run_verify_rule(rule_file, rule_text, rule_copies, out, err);
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace nls
