#pragma once

#include <vector>

#include "fracosc/grid.hpp"

namespace fracosc {

/// A fractional order mu, strictly inside (0,1).
class FracOrder {
 public:
  explicit FracOrder(double mu);
  double value() const { return mu_; }

 private:
  double mu_;
};

/// I_{0+}^mu g: product integration of the kernel (t-s)^{mu-1}/Gamma(mu)
/// against the piecewise-linear interpolant of g. Exactly 0 at t = 0, and
/// exact (up to roundoff) whenever g is linear.
GridFunction left_rl_integral(const GridFunction& g, FracOrder mu);

/// I_{1-}^mu g: mirror image of left_rl_integral. Exactly 0 at t = 1.
GridFunction right_rl_integral(const GridFunction& g, FracOrder mu);

/// cD_{1-}^mu g = -I_{1-}^{1-mu} g': L1 scheme, per-cell difference
/// quotients against the exactly integrated kernel. Exactly 0 at t = 1.
GridFunction right_caputo_derivative(const GridFunction& g, FracOrder mu);

/// D_{0+}^mu g, split as the left-Caputo L1 part plus the initial-value
/// term g(0) t^{-mu}/Gamma(1-mu). When g(0) != 0 that term blows up at
/// t = 0; values then holds only the regular part at node 0 and
/// origin_singular is set.
struct LeftRlDerivative {
  GridFunction values;
  bool origin_singular;
};
LeftRlDerivative left_rl_derivative(const GridFunction& g, FracOrder mu);

/// For each order r, the sup distance on interior nodes between
/// cD_{1-}^r g and -g' (central differences). Orders must be strictly
/// increasing.
struct LimitProbeEntry {
  double order;
  double distance;
};
std::vector<LimitProbeEntry> caputo_limit_probe(
    const GridFunction& g, const std::vector<FracOrder>& orders);

}  // namespace fracosc
