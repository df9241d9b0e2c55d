#include "fracosc/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fracosc::validate {
namespace {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1,1] (positive half).
constexpr double kNodes[8] = {
    0.000000000000000, 0.405845151377397, 0.741531185599394,
    0.949107912342759, 0.207784955007898, 0.586087235467691,
    0.864864423359769, 0.991455371120813,
};
constexpr double kGaussW[8] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870, 0.0, 0.0, 0.0, 0.0,
};
constexpr double kKronrodW[8] = {
    0.209482141084728, 0.190350578064785, 0.140653259715525,
    0.063092092629979, 0.204432940075298, 0.169004726639267,
    0.104790010322250, 0.022935322010529,
};

double gk15(const std::function<double(double)>& f, double a, double b,
            double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double g7 = kGaussW[0] * f0;
  double k15 = kKronrodW[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i];
    const double fs = f(mid + dx) + f(mid - dx);
    g7 += kGaussW[i] * fs;
    k15 += kKronrodW[i] * fs;
  }
  g7 *= half;
  k15 *= half;
  const double scaled = 200.0 * std::abs(g7 - k15);
  err = std::max(scaled * std::sqrt(scaled),
                 std::numeric_limits<double>::epsilon() * 50.0 * std::abs(k15));
  return k15;
}

QuadResult adaptive_gk15(const std::function<double(double)>& f, double a,
                         double b, double rel_tol) {
  if (a == b) return {0.0, 0.0, true};
  struct Seg {
    double a, b;
  };
  double whole_err = 0.0;
  const double whole = gk15(f, a, b, whole_err);
  const double target = rel_tol * std::max(std::abs(whole), 1e-30);

  std::vector<Seg> stack{{a, b}};
  double sum = 0.0;
  double errsum = 0.0;
  bool budget_ok = true;
  int evals = 1;
  constexpr int kMaxSegments = 20000;
  const double min_width = 1e-14 * (b - a);
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    double e = 0.0;
    const double v = gk15(f, s.a, s.b, e);
    ++evals;
    const double local_target = target * (s.b - s.a) / (b - a);
    if (e <= local_target || (s.b - s.a) <= min_width || evals >= kMaxSegments) {
      if (e > local_target) budget_ok = false;
      sum += v;
      errsum += e;
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    stack.push_back({s.a, mid});
    stack.push_back({mid, s.b});
  }
  const bool converged =
      budget_ok && errsum <= 8.0 * rel_tol * std::max(std::abs(sum), 1e-30);
  return {sum, errsum, converged};
}

}  // namespace

double example_solution(double t) {
  return std::sqrt(t) / 100.0 * (1.0 - 2.0 * t / 3.0);
}

double example_alpha(double t) {
  return std::sqrt(t) * (1.5 - t) / (100.0 * std::tgamma(2.5));
}

double example_beta(double t) { return -example_alpha(t); }

solver::ProblemSpec example_problem(int n) {
  solver::ProblemSpec s(1.0, FracOrder(0.5), FracOrder(0.5),
                        expr::Expression::parse("x - 0.01*(1-t)^0.5"));
  s.A = 0.01;
  s.B = -0.01;
  s.n = n;
  return s;
}

QuadResult reference_frac_integral(const std::function<double(double)>& f,
                                   FracOrder mu, Side side, double t,
                                   double rel_tol) {
  const double m = mu.value();
  // 1/Gamma(mu) int_0^t (t-s)^{mu-1} f(s) ds
  //   = 1/Gamma(mu+1) int_0^{t^mu} f(t - w^{1/mu}) dw        (left)
  // and mirrored over [t,1] for the right integral.
  const double inv_m = 1.0 / m;
  const double upper = side == Side::left ? std::pow(t, m) : std::pow(1.0 - t, m);
  const auto integrand = [&](double w) {
    const double offset = std::pow(w, inv_m);
    return side == Side::left ? f(t - offset) : f(t + offset);
  };
  QuadResult q = adaptive_gk15(integrand, 0.0, upper, rel_tol);
  const double norm = std::tgamma(m + 1.0);
  q.value /= norm;
  q.abs_error /= norm;
  return q;
}

ConvergenceStudy run_convergence(const solver::ProblemSpec& base,
                                 const std::function<double(double)>& oracle,
                                 const std::vector<int>& sizes) {
  if (sizes.size() < 3) {
    throw std::invalid_argument("run_convergence: need at least 3 sizes");
  }
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    if (!(sizes[k] > sizes[k - 1]) || (sizes[k] - 1) % (sizes[k - 1] - 1) != 0) {
      throw std::invalid_argument(
          "run_convergence: sizes must be increasing and nested");
    }
  }
  ConvergenceStudy st;
  st.complete = true;
  for (const int n : sizes) {
    solver::ProblemSpec s = base;
    s.n = n;
    const solver::SolveResult r = solver::solve(s);
    if (!r.report.converged) st.complete = false;
    const Grid g(n);
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
      err = std::max(err, std::abs(r.u[i] - oracle(g.node(i))));
    }
    st.sizes.push_back(n);
    st.errors.push_back(err);
  }
  st.orders.assign(st.errors.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t k = 1; k < st.errors.size(); ++k) {
    if (st.errors[k - 1] > 0.0 && st.errors[k] > 0.0) {
      st.orders[k] = std::log2(st.errors[k - 1] / st.errors[k]);
    }
  }
  return st;
}

}  // namespace fracosc::validate
