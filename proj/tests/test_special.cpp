#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "fracosc/special.hpp"

using fracosc::gamma_fn;

TEST_CASE("gamma matches the standard library across (0,10]") {
  for (double x = 0.05; x <= 10.0; x += 0.01) {
    const double ref = std::tgamma(x);
    CHECK(std::abs(gamma_fn(x) - ref) <= 1e-12 * std::abs(ref));
  }
}

TEST_CASE("gamma reproduces exact values") {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  CHECK(gamma_fn(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-14));
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(3.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(gamma_fn(2.5) == doctest::Approx(0.75 * sqrt_pi * 2.0 / 2.0 * 1.0).epsilon(1e-14));
  // Gamma(5/2) = 3 sqrt(pi) / 4
  CHECK(gamma_fn(2.5) == doctest::Approx(3.0 * sqrt_pi / 4.0).epsilon(1e-14));
}

TEST_CASE("gamma rejects nonpositive arguments") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}
