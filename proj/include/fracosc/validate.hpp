#pragma once

#include <functional>
#include <vector>

#include "fracosc/fracops.hpp"
#include "fracosc/solver.hpp"

namespace fracosc::validate {

/// Closed forms of the worked example: omega = 1, p = q = 1/2,
/// f(t,x) = x - (1-t)^{1/2}/100, A = 1/100, B = -1/100.
double example_solution(double t);  // t^{1/2}(1 - 2t/3)/100
double example_alpha(double t);     // t^{1/2}(3/2 - t)/(100 Gamma(5/2))
double example_beta(double t);      // -example_alpha(t)
solver::ProblemSpec example_problem(int n = 1025);

enum class Side { left, right };

struct QuadResult {
  double value;
  double abs_error;  // accumulated estimate
  bool converged;
};

/// High-resolution reference for the fractional integrals: the kernel
/// singularity is removed by the substitution s = t -+ w^{1/mu} and the
/// smooth remainder is integrated by adaptive Gauss-Kronrod 7/15. Test-only
/// oracle; independent of the grid operators.
QuadResult reference_frac_integral(const std::function<double(double)>& f,
                                   FracOrder mu, Side side, double t,
                                   double rel_tol = 1e-9);

struct ConvergenceStudy {
  std::vector<int> sizes;
  std::vector<double> errors;  // sup distance to the oracle per size
  std::vector<double> orders;  // log2(e_k/e_{k+1}); NaN when an error is 0
  bool complete;               // false if any solve failed to converge
};

/// Solves the problem at each size (sizes must be nested: each n-1 divides
/// the next) and compares u against the oracle in the sup norm.
ConvergenceStudy run_convergence(const solver::ProblemSpec& base,
                                 const std::function<double(double)>& oracle,
                                 const std::vector<int>& sizes);

}  // namespace fracosc::validate
