#include "fracosc/fracops.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "fracosc/kernels.hpp"
#include "fracosc/special.hpp"

namespace fracosc {
namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Weights of the L1 / product-integration schemes. Both families depend
// only on the node distance, which is what reduces every operator here to
// one triangular correlation.

// Interior weights of the piecewise-linear product integration:
// w_0 = 1, w_k = (k+1)^{m+1} - 2 k^{m+1} + (k-1)^{m+1}.
std::vector<double> integral_weights(int count, double m) {
  std::vector<double> w(idx(count));
  if (count > 0) w[0] = 1.0;
  for (int k = 1; k < count; ++k) {
    const double kd = k;
    w[idx(k)] = std::pow(kd + 1.0, m + 1.0) - 2.0 * std::pow(kd, m + 1.0) +
                std::pow(kd - 1.0, m + 1.0);
  }
  return w;
}

// Per-cell kernel integrals of the L1 scheme: c_k = (k+1)^{1-m} - k^{1-m}.
std::vector<double> l1_weights(int count, double m) {
  std::vector<double> c(idx(count));
  for (int k = 0; k < count; ++k) {
    const double kd = k;
    c[idx(k)] = std::pow(kd + 1.0, 1.0 - m) - std::pow(kd, 1.0 - m);
  }
  return c;
}

std::vector<double> forward_differences(const GridFunction& g) {
  std::vector<double> d(idx(g.size() - 1));
  for (int j = 0; j + 1 < g.size(); ++j) d[idx(j)] = g[j + 1] - g[j];
  return d;
}

// The left-Caputo L1 value at every node (0 at t = 0).
std::vector<double> left_caputo_l1(const GridFunction& g, double m) {
  const int n = g.size();
  const double scale = std::pow(g.grid().spacing(), -m) / gamma_fn(2.0 - m);
  const auto c = l1_weights(n - 1, m);
  auto dg = forward_differences(g);
  std::vector<double> rev(dg.rbegin(), dg.rend());
  std::vector<double> corr(idx(n - 1));
  kernels::tri_corr(c, rev, corr);
  std::vector<double> out(idx(n), 0.0);
  for (int i = 1; i < n; ++i) out[idx(i)] = scale * corr[idx(n - 1 - i)];
  return out;
}

}  // namespace

FracOrder::FracOrder(double mu) : mu_(mu) {
  if (!(mu > 0.0) || !(mu < 1.0)) {
    throw std::invalid_argument("FracOrder: order must lie strictly in (0,1), got " +
                                std::to_string(mu));
  }
}

GridFunction left_rl_integral(const GridFunction& g, FracOrder mu) {
  const int n = g.size();
  const double m = mu.value();
  const double scale = std::pow(g.grid().spacing(), m) / gamma_fn(m + 2.0);
  const auto w = integral_weights(n - 1, m);

  // out_i = scale * (b_i g_0 + sum_{k=0}^{i-1} w_k g_{i-k}); the inner sum
  // is the triangular correlation of w against g[1..] reversed.
  std::vector<double> rev(idx(n - 1));
  for (int j = 0; j < n - 1; ++j) rev[idx(j)] = g[n - 1 - j];
  std::vector<double> corr(idx(n - 1));
  kernels::tri_corr(w, rev, corr);

  std::vector<double> out(idx(n), 0.0);
  for (int i = 1; i < n; ++i) {
    const double id = i;
    const double b = std::pow(id - 1.0, m + 1.0) - (id - 1.0 - m) * std::pow(id, m);
    out[idx(i)] = scale * (b * g[0] + corr[idx(n - 1 - i)]);
  }
  return GridFunction(g.grid(), std::move(out));
}

GridFunction right_rl_integral(const GridFunction& g, FracOrder mu) {
  const int n = g.size();
  std::vector<double> rev(idx(n));
  for (int i = 0; i < n; ++i) rev[idx(i)] = g[n - 1 - i];
  GridFunction mirrored = left_rl_integral(GridFunction(g.grid(), std::move(rev)), mu);
  std::vector<double> out(idx(n));
  for (int i = 0; i < n; ++i) out[idx(i)] = mirrored[n - 1 - i];
  return GridFunction(g.grid(), std::move(out));
}

GridFunction right_caputo_derivative(const GridFunction& g, FracOrder mu) {
  const int n = g.size();
  const double m = mu.value();
  const double scale = std::pow(g.grid().spacing(), -m) / gamma_fn(2.0 - m);
  const auto c = l1_weights(n - 1, m);
  const auto dg = forward_differences(g);
  std::vector<double> corr(idx(n - 1));
  kernels::tri_corr(c, dg, corr);
  std::vector<double> out(idx(n), 0.0);
  for (int i = 0; i < n - 1; ++i) out[idx(i)] = -scale * corr[idx(i)];
  return GridFunction(g.grid(), std::move(out));
}

LeftRlDerivative left_rl_derivative(const GridFunction& g, FracOrder mu) {
  const int n = g.size();
  const double m = mu.value();
  auto out = left_caputo_l1(g, m);
  const bool singular = g[0] != 0.0;
  if (singular) {
    const double c0 = g[0] / gamma_fn(1.0 - m);
    for (int i = 1; i < n; ++i) {
      out[idx(i)] += c0 * std::pow(g.grid().node(i), -m);
    }
  }
  return {GridFunction(g.grid(), std::move(out)), singular};
}

std::vector<LimitProbeEntry> caputo_limit_probe(
    const GridFunction& g, const std::vector<FracOrder>& orders) {
  for (std::size_t k = 1; k < orders.size(); ++k) {
    if (!(orders[k - 1].value() < orders[k].value())) {
      throw std::invalid_argument("caputo_limit_probe: orders must be strictly increasing");
    }
  }
  const int n = g.size();
  const double two_h = 2.0 * g.grid().spacing();
  std::vector<LimitProbeEntry> table;
  table.reserve(orders.size());
  for (const FracOrder& r : orders) {
    const GridFunction d = right_caputo_derivative(g, r);
    double dist = 0.0;
    for (int i = 1; i < n - 1; ++i) {
      const double minus_gprime = -(g[i + 1] - g[i - 1]) / two_h;
      dist = std::max(dist, std::abs(d[i] - minus_gprime));
    }
    table.push_back({r.value(), dist});
  }
  return table;
}

}  // namespace fracosc
