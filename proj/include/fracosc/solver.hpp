#pragma once

#include <string>
#include <vector>

#include "fracosc/expr.hpp"
#include "fracosc/fracops.hpp"
#include "fracosc/grid.hpp"

namespace fracosc::solver {

/// Full problem statement: omega^2 u - cD_{1-}^p D_{0+}^q u = f(t,u) on
/// [0,1] with u(0) = 0 and D_{0+}^q u(1) = 0, plus the bracket constants
/// A >= 0 >= B (A >= |B|) and the numerical controls.
struct ProblemSpec {
  ProblemSpec(double omega, FracOrder p, FracOrder q, expr::Expression f);

  double omega;
  FracOrder p;
  FracOrder q;
  expr::Expression f;
  double A = 0.0;
  double B = 0.0;
  int n = 1025;
  double tol = 1e-10;
  int max_iter = 200;
  double damping = 0.5;
  std::vector<double> r_samples;  // empty: use the default family sample

  void validate() const;  // throws std::invalid_argument

  /// r_samples if given, else {p, (1+p)/2, (3+p)/4, 0.95, 0.99} clipped to
  /// [p, 1), sorted and deduplicated.
  std::vector<double> resolved_r_samples() const;
};

/// Generators phi = A(1-t), psi = B(1-t) and the lower/upper solutions
/// alpha = T phi, beta = T psi (reverse order: beta <= alpha).
struct BracketPair {
  GridFunction phi, psi;
  GridFunction alpha, beta;
};

struct HypothesisMargin {
  double margin;  // minimum over the sampled box; negative means violated
  double t, x, r;
};

struct HypothesisReport {
  bool pass;
  HypothesisMargin h1, h2;
};

struct SolveReport {
  int iterations = 0;
  std::vector<double> residual_history;  // sup|v_{k+1} - v_k| per step
  bool converged = false;
  double M = 0.0;  // max |omega^2 x - f(t,x)| over the bracket box
  bool bracket_ok = false;
  double bc_u0 = 0.0;    // |u(0)|
  double bc_dqu1 = 0.0;  // |D_{0+}^q u(1)|
  double ode_residual = 0.0;  // interior sup of the defect
  HypothesisReport hypotheses{};
};

struct SolveResult {
  GridFunction u, v;
  BracketPair bracket;
  SolveReport report;
};

struct Residual {
  GridFunction defect;  // omega^2 u - cD_{1-}^p D_{0+}^q u - f(t,u)
  double bc_u0, bc_dqu1;
};

enum class Monotonicity { decreasing, increasing, inconclusive };
std::string to_string(Monotonicity m);

/// Tv = I_{0+}^q v; exactly 0 at t = 0.
GridFunction apply_T(const GridFunction& v, FracOrder q);

/// Samples phi and psi and pushes them through T; checks the bracket
/// ordering and 0 <= alpha <= A/Gamma(q+1).
BracketPair build_bracket(const ProblemSpec& spec);

/// Samples the boxes of the two sign hypotheses: omega^2 x - f(t,x) below
/// A(1-t)^{1-r} on x in [0, A/Gamma(q+1)], above B(1-t)^{1-r} on
/// x in [B/Gamma(q+1), 0], over grid t, 64 x points and the r family.
HypothesisReport check_hypotheses(const ProblemSpec& spec);

/// Fv = -omega^2 T w + f(t, T w) with w = min(phi, max(v, psi)).
GridFunction clamp_F(const GridFunction& v, const ProblemSpec& spec,
                     const BracketPair& b);

/// One fixed-point sweep of the transformed problem; exactly 0 at t = 1.
GridFunction apply_R(const GridFunction& v, const ProblemSpec& spec,
                     const BracketPair& b);

/// Damped Picard iteration v <- (1-damping) v + damping R v starting from
/// (phi+psi)/2; u = T v. Non-convergence is reported, not thrown.
SolveResult solve(const ProblemSpec& spec);

/// beta - slack <= u <= alpha + slack and psi - slack <= v <= phi + slack
/// at every node.
bool verify_bracket(const GridFunction& u, const GridFunction& v,
                    const BracketPair& b, double slack);

Residual residual(const GridFunction& u, const ProblemSpec& spec);

/// Sign of cD_{1-}^r g across the sampled orders, confirmed against
/// discrete differences of g.
Monotonicity monotonicity_check(const GridFunction& g,
                                const std::vector<FracOrder>& orders);

/// The constant M bounding |omega^2 x - f(t,x)| over beta <= x <= alpha.
double nonlinearity_bound(const ProblemSpec& spec, const BracketPair& b);

inline constexpr double kBracketSlack = 1e-9;

}  // namespace fracosc::solver
