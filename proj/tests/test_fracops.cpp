#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include <doctest.h>

#include "fracosc/fracops.hpp"
#include "fracosc/grid.hpp"
#include "fracosc/special.hpp"

using namespace fracosc;

namespace {

GridFunction random_function(const Grid& g, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(g.size()));
  for (auto& x : v) x = dist(rng);
  return GridFunction(g, std::move(v));
}

double rel_sup_error(const GridFunction& got, const GridFunction& want) {
  return sup_distance(got, want) / sup_norm(want);
}

}  // namespace

TEST_CASE("fractional orders live strictly inside (0,1)") {
  CHECK_THROWS_AS(FracOrder(0.0), std::invalid_argument);
  CHECK_THROWS_AS(FracOrder(1.0), std::invalid_argument);
  CHECK_THROWS_AS(FracOrder(-0.2), std::invalid_argument);
  CHECK(FracOrder(0.5).value() == 0.5);
}

TEST_CASE("left integral of a constant is the power law") {
  const Grid g(257);
  const GridFunction one = sample([](double) { return 1.0; }, g);
  for (const double m : {0.3, 0.5, 0.7}) {
    const GridFunction got = left_rl_integral(one, FracOrder(m));
    const GridFunction want =
        sample([&](double t) { return std::pow(t, m) / gamma_fn(m + 1.0); }, g);
    CHECK(rel_sup_error(got, want) <= 1e-12);
    CHECK(got[0] == 0.0);
  }
}

TEST_CASE("left integral reproduces the bracket generator image exactly") {
  // T of A(1-t) has the closed form A t^q (q+1-t) / Gamma(q+2); the scheme
  // integrates linear data exactly.
  const Grid g(513);
  const double A = 0.01;
  const GridFunction phi = sample([&](double t) { return A * (1.0 - t); }, g);
  for (const double q : {0.3, 0.5, 0.8}) {
    const GridFunction got = left_rl_integral(phi, FracOrder(q));
    const GridFunction want = sample(
        [&](double t) {
          return A * std::pow(t, q) * (q + 1.0 - t) / gamma_fn(q + 2.0);
        },
        g);
    CHECK(sup_distance(got, want) <= 1e-14);
  }
}

TEST_CASE("left integral of zero is zero") {
  const Grid g(65);
  const GridFunction got = left_rl_integral(GridFunction::zeros(g), FracOrder(0.4));
  for (int i = 0; i < g.size(); ++i) CHECK(got[i] == 0.0);
}

TEST_CASE("right integral power laws and endpoint") {
  const Grid g(257);
  const GridFunction one = sample([](double) { return 1.0; }, g);
  for (const double m : {0.3, 0.7}) {
    const GridFunction got = right_rl_integral(one, FracOrder(m));
    const GridFunction want = sample(
        [&](double t) { return std::pow(1.0 - t, m) / gamma_fn(m + 1.0); }, g);
    CHECK(rel_sup_error(got, want) <= 1e-12);
    CHECK(got[g.size() - 1] == 0.0);
  }

  const GridFunction lin = sample([](double t) { return 1.0 - t; }, g);
  const GridFunction got = right_rl_integral(lin, FracOrder(0.5));
  const GridFunction want = sample(
      [&](double t) { return std::pow(1.0 - t, 1.5) / gamma_fn(2.5); }, g);
  CHECK(sup_distance(got, want) <= 1e-14);
}

TEST_CASE("right integral is the reflection of the left integral") {
  std::mt19937 rng(5);
  const Grid g(129);
  const GridFunction f = random_function(g, rng);
  std::vector<double> rev(f.values().rbegin(), f.values().rend());
  const GridFunction fr(g, std::move(rev));
  const FracOrder m(0.6);
  const GridFunction right = right_rl_integral(f, m);
  const GridFunction left = left_rl_integral(fr, m);
  for (int i = 0; i < g.size(); ++i) CHECK(right[i] == left[g.size() - 1 - i]);
}

TEST_CASE("right caputo derivative annihilates constants") {
  const Grid g(65);
  const GridFunction c = sample([](double) { return 3.25; }, g);
  const GridFunction got = right_caputo_derivative(c, FracOrder(0.5));
  for (int i = 0; i < g.size(); ++i) CHECK(got[i] == 0.0);
}

TEST_CASE("right caputo derivative of the generator is exact") {
  const Grid g(257);
  const double A = 0.01;
  const GridFunction phi = sample([&](double t) { return A * (1.0 - t); }, g);
  for (const double r : {0.3, 0.5, 0.9}) {
    const GridFunction got = right_caputo_derivative(phi, FracOrder(r));
    const GridFunction want = sample(
        [&](double t) {
          return A * std::pow(1.0 - t, 1.0 - r) / gamma_fn(2.0 - r);
        },
        g);
    CHECK(sup_distance(got, want) <= 1e-15);
    CHECK(got[g.size() - 1] == 0.0);
  }
}

TEST_CASE("left derivative recovers power laws away from the origin cusp") {
  const Grid g(1025);
  for (const double m : {0.3, 0.5, 0.7}) {
    const GridFunction f = sample([&](double t) { return std::pow(t, m); }, g);
    const LeftRlDerivative d = left_rl_derivative(f, FracOrder(m));
    CHECK_FALSE(d.origin_singular);
    double err = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      if (g.node(i) < 0.1) continue;
      err = std::max(err, std::abs(d.values[i] - gamma_fn(m + 1.0)));
    }
    CHECK(err <= 2e-3);
  }
}

TEST_CASE("left derivative inverts T on the bracket generator") {
  const Grid g(1025);
  const double A = 2.0;
  for (const double q : {0.3, 0.5, 0.7}) {
    const GridFunction alpha = sample(
        [&](double t) {
          return A * std::pow(t, q) * (q + 1.0 - t) / gamma_fn(q + 2.0);
        },
        g);
    const LeftRlDerivative d = left_rl_derivative(alpha, FracOrder(q));
    CHECK_FALSE(d.origin_singular);
    double err = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      if (g.node(i) < 0.1) continue;
      err = std::max(err, std::abs(d.values[i] - A * (1.0 - g.node(i))));
    }
    CHECK(err <= 2e-3 * A);
  }
}

TEST_CASE("left derivative of zero is zero, and the origin flag fires") {
  const Grid g(33);
  const LeftRlDerivative z = left_rl_derivative(GridFunction::zeros(g), FracOrder(0.5));
  CHECK_FALSE(z.origin_singular);
  for (int i = 0; i < g.size(); ++i) CHECK(z.values[i] == 0.0);

  const GridFunction one = sample([](double) { return 1.0; }, g);
  const LeftRlDerivative d = left_rl_derivative(one, FracOrder(0.5));
  CHECK(d.origin_singular);
  // constant input: the whole value is the initial-value term t^{-m}/Gamma(1-m)
  for (int i = 1; i < g.size(); ++i) {
    const double want = std::pow(g.node(i), -0.5) / gamma_fn(0.5);
    CHECK(d.values[i] == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("operators are linear to roundoff") {
  std::mt19937 rng(17);
  const Grid g(129);
  const GridFunction f = random_function(g, rng);
  const GridFunction h = random_function(g, rng);
  const double a = 1.7, b = -0.4;
  const GridFunction combo = axpy(a, f, scale(b, h));
  const FracOrder m(0.45);

  const auto check_linear = [&](auto&& op) {
    const GridFunction lhs = op(combo);
    const GridFunction rhs = axpy(a, op(f), scale(b, op(h)));
    CHECK(sup_distance(lhs, rhs) <= 1e-12 * (1.0 + sup_norm(lhs)));
  };
  check_linear([&](const GridFunction& x) { return left_rl_integral(x, m); });
  check_linear([&](const GridFunction& x) { return right_rl_integral(x, m); });
  check_linear([&](const GridFunction& x) { return right_caputo_derivative(x, m); });
  check_linear([&](const GridFunction& x) { return left_rl_derivative(x, m).values; });
}

TEST_CASE("integral kernels are positivity preserving") {
  std::mt19937 rng(23);
  const Grid g(97);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(g.size()));
  for (auto& x : v) x = dist(rng);
  const GridFunction f(g, std::move(v));
  for (const double m : {0.2, 0.5, 0.9}) {
    const GridFunction li = left_rl_integral(f, FracOrder(m));
    const GridFunction ri = right_rl_integral(f, FracOrder(m));
    for (int i = 0; i < g.size(); ++i) {
      CHECK(li[i] >= 0.0);
      CHECK(ri[i] >= 0.0);
    }
  }
}

TEST_CASE("composition: right integral after right caputo recovers f - f(1)") {
  for (const double m : {0.3, 0.5, 0.7}) {
    std::vector<double> errs;
    for (const int n : {129, 257, 513}) {
      const Grid g(n);
      const GridFunction f = sample([](double t) { return t * t * t - t; }, g);
      const GridFunction comp =
          right_rl_integral(right_caputo_derivative(f, FracOrder(m)), FracOrder(m));
      const double f1 = f[g.size() - 1];
      double err = 0.0;
      for (int i = 0; i < g.size(); ++i) {
        err = std::max(err, std::abs(comp[i] - (f[i] - f1)));
      }
      errs.push_back(err);
    }
    CHECK(errs[0] / errs[1] >= 1.7);  // empirical order >= 1
    CHECK(errs[1] / errs[2] >= 1.7);
  }
}

TEST_CASE("composition: left integral after left derivative, f(0) = 0") {
  for (const auto& fn : {+[](double t) { return t; }, +[](double t) { return t * t; }}) {
    std::vector<double> errs;
    for (const int n : {129, 257, 513}) {
      const Grid g(n);
      const GridFunction f = sample(fn, g);
      const LeftRlDerivative d = left_rl_derivative(f, FracOrder(0.5));
      REQUIRE_FALSE(d.origin_singular);
      const GridFunction comp = left_rl_integral(d.values, FracOrder(0.5));
      double err = 0.0;
      for (int i = 1; i < g.size() - 1; ++i) {
        err = std::max(err, std::abs(comp[i] - f[i]));
      }
      errs.push_back(err);
    }
    CHECK(errs[0] / errs[1] >= 1.7);
    CHECK(errs[1] / errs[2] >= 1.7);
  }
}

TEST_CASE("power-law identity across orders") {
  const Grid g(1025);
  for (const double m : {0.3, 0.5, 0.7}) {
    for (const double nu : {0.5, 1.0, 2.0}) {
      const GridFunction f = sample([&](double t) { return std::pow(t, nu); }, g);
      const GridFunction got = left_rl_integral(f, FracOrder(m));
      const GridFunction want = sample(
          [&](double t) {
            return gamma_fn(nu + 1.0) / gamma_fn(nu + m + 1.0) * std::pow(t, nu + m);
          },
          g);
      CHECK(rel_sup_error(got, want) <= 1e-3);
    }
  }
}

TEST_CASE("caputo limit probe") {
  const Grid g(257);

  const GridFunction c = sample([](double) { return 2.0; }, g);
  const std::vector<FracOrder> orders{FracOrder(0.7), FracOrder(0.9)};
  for (const auto& row : caputo_limit_probe(c, orders)) CHECK(row.distance == 0.0);

  // linear data: the scheme is exact, so the distance equals the closed form
  const GridFunction lin = sample([](double t) { return 1.0 - t; }, g);
  const auto table = caputo_limit_probe(lin, orders);
  for (std::size_t k = 0; k < table.size(); ++k) {
    const double r = table[k].order;
    double want = 0.0;
    for (int i = 1; i < g.size() - 1; ++i) {
      want = std::max(want,
                      std::abs(std::pow(1.0 - g.node(i), 1.0 - r) / gamma_fn(2.0 - r) - 1.0));
    }
    CHECK(table[k].distance == doctest::Approx(want).epsilon(1e-12));
  }

  const GridFunction sq = sample([](double t) { return t * t; }, g);
  const auto probe = caputo_limit_probe(
      sq, {FracOrder(0.9), FracOrder(0.99), FracOrder(0.999)});
  CHECK(probe[0].distance > probe[1].distance);
  CHECK(probe[1].distance > probe[2].distance);

  CHECK_THROWS_AS(caputo_limit_probe(sq, {FracOrder(0.9), FracOrder(0.8)}),
                  std::invalid_argument);
}
