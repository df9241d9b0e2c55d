#include "fracosc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

#include "fracosc/special.hpp"

namespace fracosc::solver {
namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr int kHypothesisXSamples = 64;
constexpr int kBoundXSamples = 64;

}  // namespace

ProblemSpec::ProblemSpec(double omega, FracOrder p, FracOrder q, expr::Expression f)
    : omega(omega), p(p), q(q), f(std::move(f)) {}

void ProblemSpec::validate() const {
  if (omega == 0.0) throw std::invalid_argument("ProblemSpec: omega must be nonzero");
  if (!(A >= 0.0)) throw std::invalid_argument("ProblemSpec: A must be nonnegative");
  if (!(B <= 0.0)) throw std::invalid_argument("ProblemSpec: B must be nonpositive");
  if (!(A >= -B)) throw std::invalid_argument("ProblemSpec: need A >= |B|");
  if (n < 3) throw std::invalid_argument("ProblemSpec: n must be at least 3");
  if (!(tol > 0.0)) throw std::invalid_argument("ProblemSpec: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("ProblemSpec: max_iter must be positive");
  if (!(damping > 0.0) || !(damping <= 1.0)) {
    throw std::invalid_argument("ProblemSpec: damping must lie in (0,1]");
  }
  for (std::size_t k = 0; k < r_samples.size(); ++k) {
    const double r = r_samples[k];
    if (!(r >= p.value()) || !(r < 1.0)) {
      throw std::invalid_argument("ProblemSpec: r_samples entries must lie in [p,1)");
    }
    if (k > 0 && !(r_samples[k - 1] <= r)) {
      throw std::invalid_argument("ProblemSpec: r_samples must be sorted");
    }
  }
}

std::vector<double> ProblemSpec::resolved_r_samples() const {
  if (!r_samples.empty()) return r_samples;
  const double pv = p.value();
  std::vector<double> rs = {pv, (1.0 + pv) / 2.0, (3.0 + pv) / 4.0, 0.95, 0.99};
  std::erase_if(rs, [&](double r) { return r < pv || r >= 1.0; });
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return rs;
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::inconclusive: return "inconclusive";
  }
  return "?";
}

GridFunction apply_T(const GridFunction& v, FracOrder q) {
  return left_rl_integral(v, q);
}

BracketPair build_bracket(const ProblemSpec& spec) {
  spec.validate();
  const Grid g(spec.n);
  GridFunction phi = sample([&](double t) { return spec.A * (1.0 - t); }, g);
  GridFunction psi = sample([&](double t) { return spec.B * (1.0 - t); }, g);
  GridFunction alpha = apply_T(phi, spec.q);
  GridFunction beta = apply_T(psi, spec.q);

  const double cap = spec.A / gamma_fn(spec.q.value() + 1.0);
  const double slack = 1e-10 * (1.0 + spec.A);
  for (int i = 0; i < g.size(); ++i) {
    if (psi[i] > phi[i] || beta[i] > alpha[i] ||
        alpha[i] < -slack || alpha[i] > cap + slack) {
      throw std::logic_error("build_bracket: ordering violated at node " +
                             std::to_string(i));
    }
  }
  if (alpha[0] != 0.0 || beta[0] != 0.0) {
    throw std::logic_error("build_bracket: alpha(0) and beta(0) must vanish");
  }
  return {std::move(phi), std::move(psi), std::move(alpha), std::move(beta)};
}

HypothesisReport check_hypotheses(const ProblemSpec& spec) {
  spec.validate();
  const Grid g(spec.n);
  const double gq1 = gamma_fn(spec.q.value() + 1.0);
  const auto rs = spec.resolved_r_samples();
  const double w2 = spec.omega * spec.omega;

  double seen = 0.0;  // magnitude scale for the sign tolerance
  const auto scan = [&](double xlo, double xhi, double coef, bool from_above) {
    HypothesisMargin mg{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
    for (const double r : rs) {
      for (int i = 0; i < g.size(); ++i) {
        const double t = g.node(i);
        const double env = coef * std::pow(1.0 - t, 1.0 - r);
        for (int k = 0; k < kHypothesisXSamples; ++k) {
          const double x = xlo + (xhi - xlo) * k / (kHypothesisXSamples - 1.0);
          const double lhs = w2 * x - spec.f.eval(t, x);
          seen = std::max(seen, std::abs(lhs));
          const double m = from_above ? env - lhs : lhs - env;
          if (m < mg.margin) mg = {m, t, x, r};
        }
      }
    }
    return mg;
  };

  const HypothesisMargin h1 = scan(0.0, spec.A / gq1, spec.A, true);
  const HypothesisMargin h2 = scan(spec.B / gq1, 0.0, spec.B, false);
  // Tolerate cancellation noise of the sampled sides.
  const double eta = 1e-12 * (1.0 + seen);
  return {h1.margin >= -eta && h2.margin >= -eta, h1, h2};
}

GridFunction clamp_F(const GridFunction& v, const ProblemSpec& spec,
                     const BracketPair& b) {
  const GridFunction w = clamp(v, b.psi, b.phi);
  const GridFunction uw = apply_T(w, spec.q);
  std::vector<double> out(idx(v.size()));
  const double w2 = spec.omega * spec.omega;
  for (int i = 0; i < v.size(); ++i) {
    out[idx(i)] = -w2 * uw[i] + spec.f.eval(v.grid().node(i), uw[i]);
  }
  return GridFunction(v.grid(), std::move(out));
}

GridFunction apply_R(const GridFunction& v, const ProblemSpec& spec,
                     const BracketPair& b) {
  return right_rl_integral(scale(-1.0, clamp_F(v, spec, b)), spec.p);
}

SolveResult solve(const ProblemSpec& spec) {
  spec.validate();
  BracketPair bracket = build_bracket(spec);
  SolveReport rep;
  rep.hypotheses = check_hypotheses(spec);

  GridFunction v = scale(0.5, axpy(1.0, bracket.phi, bracket.psi));
  for (int it = 0; it < spec.max_iter; ++it) {
    GridFunction rv = apply_R(v, spec, bracket);
    GridFunction vn = axpy(1.0 - spec.damping, v, scale(spec.damping, rv));
    const double res = sup_distance(vn, v);
    rep.residual_history.push_back(res);
    v = std::move(vn);
    if (res <= spec.tol) {
      rep.converged = true;
      break;
    }
  }
  rep.iterations = static_cast<int>(rep.residual_history.size());

  GridFunction u = apply_T(v, spec.q);
  rep.M = nonlinearity_bound(spec, bracket);
  rep.bracket_ok = verify_bracket(u, v, bracket, kBracketSlack);
  const Residual res = residual(u, spec);
  rep.bc_u0 = res.bc_u0;
  rep.bc_dqu1 = res.bc_dqu1;
  double interior = 0.0;
  for (int i = 1; i < u.size() - 1; ++i) {
    interior = std::max(interior, std::abs(res.defect[i]));
  }
  rep.ode_residual = interior;
  return {std::move(u), std::move(v), std::move(bracket), std::move(rep)};
}

bool verify_bracket(const GridFunction& u, const GridFunction& v,
                    const BracketPair& b, double slack) {
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] < b.beta[i] - slack || u[i] > b.alpha[i] + slack) return false;
    if (v[i] < b.psi[i] - slack || v[i] > b.phi[i] + slack) return false;
  }
  return true;
}

Residual residual(const GridFunction& u, const ProblemSpec& spec) {
  const LeftRlDerivative d = left_rl_derivative(u, spec.q);
  const GridFunction cp = right_caputo_derivative(d.values, spec.p);
  const Grid& g = u.grid();
  const double w2 = spec.omega * spec.omega;
  std::vector<double> defect(idx(u.size()));
  for (int i = 0; i < u.size(); ++i) {
    defect[idx(i)] = w2 * u[i] - cp[i] - spec.f.eval(g.node(i), u[i]);
  }
  return {GridFunction(g, std::move(defect)), std::abs(u[0]),
          std::abs(d.values[u.size() - 1])};
}

Monotonicity monotonicity_check(const GridFunction& g,
                                const std::vector<FracOrder>& orders) {
  const double eta = 1e-8 * (1.0 + sup_norm(g));
  bool caputo_nonneg = true;  // sign pattern of a decreasing function
  bool caputo_nonpos = true;
  for (const FracOrder& r : orders) {
    const GridFunction d = right_caputo_derivative(g, r);
    for (int i = 1; i < g.size() - 1; ++i) {
      if (d[i] < -eta) caputo_nonneg = false;
      if (d[i] > eta) caputo_nonpos = false;
    }
    if (!caputo_nonneg && !caputo_nonpos) return Monotonicity::inconclusive;
  }
  bool diff_nonincreasing = true;
  bool diff_nondecreasing = true;
  for (int i = 0; i + 1 < g.size(); ++i) {
    if (g[i + 1] > g[i] + eta) diff_nonincreasing = false;
    if (g[i + 1] < g[i] - eta) diff_nondecreasing = false;
  }
  if (caputo_nonneg && diff_nonincreasing) return Monotonicity::decreasing;
  if (caputo_nonpos && diff_nondecreasing) return Monotonicity::increasing;
  return Monotonicity::inconclusive;
}

double nonlinearity_bound(const ProblemSpec& spec, const BracketPair& b) {
  const Grid& g = b.alpha.grid();
  const double w2 = spec.omega * spec.omega;
  double m = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const double lo = b.beta[i];
    const double hi = b.alpha[i];
    for (int k = 0; k < kBoundXSamples; ++k) {
      const double x = lo + (hi - lo) * k / (kBoundXSamples - 1.0);
      m = std::max(m, std::abs(w2 * x - spec.f.eval(g.node(i), x)));
    }
  }
  return m;
}

}  // namespace fracosc::solver
