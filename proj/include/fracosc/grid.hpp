#pragma once

#include <span>
#include <utility>
#include <vector>

namespace fracosc {

/// Uniform partition of [0,1] with n >= 3 nodes, t_i = i/(n-1).
/// t_0 = 0 and t_{n-1} = 1 are exact.
class Grid {
 public:
  explicit Grid(int n);

  int size() const { return n_; }
  double spacing() const { return 1.0 / (n_ - 1); }
  double node(int i) const { return static_cast<double>(i) / (n_ - 1); }
  std::vector<double> nodes() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
};

/// Real samples on a Grid. Values are finite and immutable after
/// construction.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction zeros(const Grid& g);

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const double> values() const { return values_; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// values_i = f(t_i); rejects non-finite samples.
template <class F>
GridFunction sample(F&& f, const Grid& g) {
  std::vector<double> v(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    v[static_cast<std::size_t>(i)] = f(g.node(i));
  }
  return GridFunction(g, std::move(v));
}

double sup_norm(const GridFunction& v);
double sup_distance(const GridFunction& a, const GridFunction& b);

/// a*x + y on a shared grid.
GridFunction axpy(double a, const GridFunction& x, const GridFunction& y);
GridFunction scale(double a, const GridFunction& x);
GridFunction pointwise_min(const GridFunction& a, const GridFunction& b);
GridFunction pointwise_max(const GridFunction& a, const GridFunction& b);

/// min(hi, max(v, lo)) nodewise; callers guarantee lo <= hi.
GridFunction clamp(const GridFunction& v, const GridFunction& lo,
                   const GridFunction& hi);

}  // namespace fracosc
