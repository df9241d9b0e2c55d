#include "fracosc/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracosc {
namespace {

// Godfrey's coefficient set for g = 607/128.
constexpr double kG = 607.0 / 128.0;
constexpr double kCoef[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos(double x) {  // requires x >= 0.5
  double sum = kCoef[0];
  for (int k = 1; k < 15; ++k) {
    sum += kCoef[k] / (x - 1.0 + k);
  }
  const double base = x + kG - 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(base, x - 0.5) *
         std::exp(-base) * sum;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_fn: argument must be positive");
  }
  if (x < 0.5) {
    // Reflection keeps the Lanczos argument away from the pole at 0.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
  }
  return lanczos(x);
}

}  // namespace fracosc
