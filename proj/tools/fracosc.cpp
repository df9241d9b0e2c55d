#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracosc/config.hpp"
#include "fracosc/expr.hpp"
#include "fracosc/fracops.hpp"
#include "fracosc/grid.hpp"
#include "fracosc/solver.hpp"
#include "fracosc/textio.hpp"
#include "fracosc/validate.hpp"

namespace {

using fracosc::FracOrder;
using fracosc::Grid;
using fracosc::GridFunction;
using fracosc::textio::fmt17;
namespace cli = fracosc::cli;
namespace solver = fracosc::solver;
namespace validate = fracosc::validate;

struct ProblemOpts {
  std::string config_path;
  bool example = false;
  std::optional<double> omega, p, q, A, B, tol, damping;
  std::optional<int> n, max_iter;
  std::optional<std::string> f, r_samples, output;
};

void add_problem_flags(CLI::App* sub, ProblemOpts& o, bool with_output) {
  auto* cfg = sub->add_option("--config", o.config_path,
                              "problem description file (key = value)");
  auto* ex = sub->add_flag("--example", o.example,
                           "load the built-in worked example");
  cfg->excludes(ex);
  sub->add_option("--omega", o.omega, "oscillator frequency (nonzero)");
  sub->add_option("--p", o.p, "order of the right Caputo derivative, in (0,1)");
  sub->add_option("--q", o.q, "order of the left Riemann-Liouville derivative, in (0,1)");
  sub->add_option("--f", o.f, "nonlinearity f(t,x) as an expression");
  sub->add_option("--A", o.A, "upper bracket constant, A >= 0");
  sub->add_option("--B", o.B, "lower bracket constant, B <= 0");
  sub->add_option("--n", o.n, "grid size (default 1025)");
  sub->add_option("--tol", o.tol, "fixed-point stopping tolerance");
  sub->add_option("--max_iter", o.max_iter, "iteration cap");
  sub->add_option("--damping", o.damping, "damping factor in (0,1]");
  sub->add_option("--r_samples", o.r_samples,
                  "comma-separated orders in [p,1) for the family checks");
  if (with_output) {
    sub->add_option("--output", o.output, "CSV destination path, or - for stdout");
  }
}

cli::Config resolve_config(const ProblemOpts& o) {
  cli::Config c;
  if (o.example) c = cli::example_config();
  if (!o.config_path.empty()) c = cli::parse_config_file(o.config_path);
  if (o.omega) c.omega = *o.omega;
  if (o.p) c.p = *o.p;
  if (o.q) c.q = *o.q;
  if (o.f) c.f = *o.f;
  if (o.A) c.A = *o.A;
  if (o.B) c.B = *o.B;
  if (o.n) c.n = *o.n;
  if (o.tol) c.tol = *o.tol;
  if (o.max_iter) c.max_iter = *o.max_iter;
  if (o.damping) c.damping = *o.damping;
  if (o.r_samples) c.r_samples = fracosc::textio::parse_double_list(*o.r_samples);
  if (o.output) c.output = *o.output;
  return c;
}

// The echoed block doubles as a loadable config file: keys are plain,
// everything else is a comment.
void print_config(std::ostream& os, const cli::Config& c,
                  const solver::ProblemSpec& spec) {
  os << "omega = " << fmt17(spec.omega) << "\n";
  os << "p = " << fmt17(spec.p.value()) << "\n";
  os << "q = " << fmt17(spec.q.value()) << "\n";
  os << "f = " << (c.f ? *c.f : std::string()) << "\n";
  os << "A = " << fmt17(spec.A) << "\n";
  os << "B = " << fmt17(spec.B) << "\n";
  os << "n = " << spec.n << "\n";
  os << "tol = " << fmt17(spec.tol) << "\n";
  os << "max_iter = " << spec.max_iter << "\n";
  os << "damping = " << fmt17(spec.damping) << "\n";
  os << "r_samples = " << fracosc::textio::join17(spec.resolved_r_samples()) << "\n";
  if (c.output) os << "output = " << *c.output << "\n";
}

void print_hypotheses(std::ostream& os, const solver::HypothesisReport& h) {
  const auto line = [&](const char* name, const solver::HypothesisMargin& m) {
    os << "# " << name << "_margin = " << fmt17(m.margin) << " at (t = "
       << fmt17(m.t) << ", x = " << fmt17(m.x) << ", r = " << fmt17(m.r) << ")\n";
  };
  os << "# hypotheses = " << (h.pass ? "pass" : "fail") << "\n";
  line("h1", h.h1);
  line("h2", h.h2);
}

int write_csv(const std::optional<std::string>& dest, const std::string& body) {
  if (!dest) return 0;
  if (*dest == "-") {
    std::cout << body;
    return 0;
  }
  std::ofstream out(*dest, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << *dest << "'\n";
    return 1;
  }
  out << body;
  return 0;
}

int run_solve(const ProblemOpts& o) {
  const cli::Config c = resolve_config(o);
  const solver::ProblemSpec spec = cli::to_problem(c);
  const solver::SolveResult r = solver::solve(spec);
  const solver::Residual res = solver::residual(r.u, spec);

  std::cout << "# fracosc solve report\n";
  print_config(std::cout, c, spec);
  print_hypotheses(std::cout, r.report.hypotheses);
  std::cout << "# iterations = " << r.report.iterations << "\n";
  std::cout << "# converged = " << (r.report.converged ? "true" : "false") << "\n";
  if (!r.report.residual_history.empty()) {
    std::cout << "# final_residual = " << fmt17(r.report.residual_history.back())
              << "\n";
  }
  std::cout << "# M = " << fmt17(r.report.M) << "\n";
  std::cout << "# bracket_ok = " << (r.report.bracket_ok ? "true" : "false") << "\n";
  std::cout << "# bc_u0 = " << fmt17(r.report.bc_u0) << "\n";
  std::cout << "# bc_dq_u1 = " << fmt17(r.report.bc_dqu1) << "\n";
  std::cout << "# ode_residual = " << fmt17(r.report.ode_residual) << "\n";
  if (!r.report.hypotheses.pass) {
    std::cerr << "warning: hypotheses fail; the existence guarantee does not "
                 "apply to this problem\n";
  }

  std::string body = "t,u,v,alpha,beta,defect\n";
  const Grid g(spec.n);
  for (int i = 0; i < g.size(); ++i) {
    body += fmt17(g.node(i));
    body += ',';
    body += fmt17(r.u[i]);
    body += ',';
    body += fmt17(r.v[i]);
    body += ',';
    body += fmt17(r.bracket.alpha[i]);
    body += ',';
    body += fmt17(r.bracket.beta[i]);
    body += ',';
    body += fmt17(res.defect[i]);
    body += '\n';
  }
  if (const int rc = write_csv(c.output, body); rc != 0) return rc;
  return r.report.converged ? 0 : 2;
}

int run_check(const ProblemOpts& o) {
  const cli::Config c = resolve_config(o);
  const solver::ProblemSpec spec = cli::to_problem(c);
  const solver::HypothesisReport h = solver::check_hypotheses(spec);
  std::cout << "# fracosc check report\n";
  print_config(std::cout, c, spec);
  print_hypotheses(std::cout, h);
  return h.pass ? 0 : 3;
}

GridFunction sample_expr(const fracosc::expr::Expression& e, const Grid& g) {
  return fracosc::sample([&](double t) { return e.eval(t, 0.0); }, g);
}

int run_op(const std::string& op, double mu, const std::string& fsrc, int n,
           const std::optional<std::string>& output) {
  const auto e = fracosc::expr::Expression::parse(fsrc);
  if (e.uses_x()) {
    std::cerr << "error: operator input must be a function of t only\n";
    return 1;
  }
  const Grid g(n);
  const GridFunction data = sample_expr(e, g);
  const FracOrder order(mu);

  std::string body = "t,value\n";
  const auto emit = [&](int i, double v) {
    body += fmt17(g.node(i));
    body += ',';
    body += fmt17(v);
    body += '\n';
  };
  if (op == "dlq") {
    const fracosc::LeftRlDerivative d = fracosc::left_rl_derivative(data, order);
    for (int i = 0; i < g.size(); ++i) {
      if (i == 0 && d.origin_singular) {
        body += "0,nan\n";
      } else {
        emit(i, d.values[i]);
      }
    }
  } else {
    GridFunction out = op == "ilq"   ? fracosc::left_rl_integral(data, order)
                       : op == "irq" ? fracosc::right_rl_integral(data, order)
                                     : fracosc::right_caputo_derivative(data, order);
    for (int i = 0; i < g.size(); ++i) emit(i, out[i]);
  }
  return write_csv(output ? output : std::optional<std::string>("-"), body);
}

int run_mono(const std::string& fsrc, const std::string& orders_text, int n) {
  const auto e = fracosc::expr::Expression::parse(fsrc);
  if (e.uses_x()) {
    std::cerr << "error: mono input must be a function of t only\n";
    return 1;
  }
  std::vector<FracOrder> orders;
  for (const double r : fracosc::textio::parse_double_list(orders_text)) {
    orders.emplace_back(r);
  }
  const GridFunction data = sample_expr(e, Grid(n));
  std::cout << solver::to_string(solver::monotonicity_check(data, orders)) << "\n";
  return 0;
}

int run_study(const ProblemOpts& o, const std::string& sizes_text) {
  if (!o.example) {
    std::cerr << "error: study needs --example; only the built-in example has "
                 "a closed-form reference solution\n";
    return 1;
  }
  const cli::Config c = resolve_config(o);
  const solver::ProblemSpec spec = cli::to_problem(c);
  const std::vector<int> sizes = fracosc::textio::parse_int_list(sizes_text);
  const validate::ConvergenceStudy st =
      validate::run_convergence(spec, validate::example_solution, sizes);

  std::string body = "n,h,sup_error,order\n";
  for (std::size_t k = 0; k < st.sizes.size(); ++k) {
    body += std::to_string(st.sizes[k]);
    body += ',';
    body += fmt17(1.0 / (st.sizes[k] - 1));
    body += ',';
    body += fmt17(st.errors[k]);
    body += ',';
    body += fmt17(st.orders[k]);
    body += '\n';
  }
  if (const int rc = write_csv(c.output ? c.output : std::optional<std::string>("-"), body);
      rc != 0) {
    return rc;
  }
  return st.complete ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional oscillator boundary value problem toolkit"};
  app.require_subcommand(1);

  ProblemOpts solve_opts, check_opts, study_opts;

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "solve the boundary value problem and emit CSV plus a report");
  add_problem_flags(solve_cmd, solve_opts, true);

  CLI::App* check_cmd =
      app.add_subcommand("check", "evaluate the sign hypotheses with margins");
  add_problem_flags(check_cmd, check_opts, false);

  CLI::App* op_cmd =
      app.add_subcommand("op", "apply one discrete fractional operator");
  std::string op_name, op_f;
  double op_mu = 0.5;
  int op_n = 1025;
  std::optional<std::string> op_output;
  op_cmd->add_option("--op", op_name, "ilq | irq | dlq | dcr")
      ->required()
      ->check(CLI::IsMember({"ilq", "irq", "dlq", "dcr"}));
  op_cmd->add_option("--mu", op_mu, "fractional order in (0,1)")->required();
  op_cmd->add_option("--f", op_f, "input function of t")->required();
  op_cmd->add_option("--n", op_n, "grid size (default 1025)");
  op_cmd->add_option("--output", op_output, "CSV destination (default stdout)");

  CLI::App* mono_cmd = app.add_subcommand(
      "mono", "classify monotonicity from the sign of the right Caputo derivative");
  std::string mono_f, mono_orders = "0.6,0.8,0.95";
  int mono_n = 1025;
  mono_cmd->add_option("--f", mono_f, "function of t")->required();
  mono_cmd->add_option("--orders", mono_orders,
                       "comma-separated orders in (0,1), increasing");
  mono_cmd->add_option("--n", mono_n, "grid size (default 1025)");

  CLI::App* study_cmd =
      app.add_subcommand("study", "grid refinement study against the example solution");
  std::string study_sizes;
  study_cmd->add_option("--sizes", study_sizes, "nested grid sizes, e.g. 257,513,1025")
      ->required();
  add_problem_flags(study_cmd, study_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opts);
    if (check_cmd->parsed()) return run_check(check_opts);
    if (op_cmd->parsed()) return run_op(op_name, op_mu, op_f, op_n, op_output);
    if (mono_cmd->parsed()) return run_mono(mono_f, mono_orders, mono_n);
    if (study_cmd->parsed()) return run_study(study_opts, study_sizes);
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fracosc::expr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fracosc::expr::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
