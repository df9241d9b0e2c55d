#include "fracosc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracosc {
namespace {

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument("grid mismatch between operands");
  }
}

}  // namespace

Grid::Grid(int n) : n_(n) {
  if (n < 3) {
    throw std::invalid_argument("Grid: need at least 3 nodes, got " +
                                std::to_string(n));
  }
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = node(i);
  return out;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid_.size())) {
    throw std::invalid_argument("GridFunction: value count does not match grid");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("GridFunction: non-finite value at node " +
                                  std::to_string(i));
    }
  }
}

GridFunction GridFunction::zeros(const Grid& g) {
  return GridFunction(g, std::vector<double>(static_cast<std::size_t>(g.size()), 0.0));
}

double sup_norm(const GridFunction& v) {
  double m = 0.0;
  for (double x : v.values()) m = std::max(m, std::abs(x));
  return m;
}

double sup_distance(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

GridFunction axpy(double a, const GridFunction& x, const GridFunction& y) {
  require_same_grid(x, y);
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    out[static_cast<std::size_t>(i)] = a * x[i] + y[i];
  }
  return GridFunction(x.grid(), std::move(out));
}

GridFunction scale(double a, const GridFunction& x) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = a * x[i];
  return GridFunction(x.grid(), std::move(out));
}

GridFunction pointwise_min(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  std::vector<double> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::min(a[i], b[i]);
  }
  return GridFunction(a.grid(), std::move(out));
}

GridFunction pointwise_max(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  std::vector<double> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  }
  return GridFunction(a.grid(), std::move(out));
}

GridFunction clamp(const GridFunction& v, const GridFunction& lo,
                   const GridFunction& hi) {
  return pointwise_min(hi, pointwise_max(v, lo));
}

}  // namespace fracosc
