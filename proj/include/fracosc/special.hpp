#pragma once

namespace fracosc {

/// Gamma function for x > 0 (Lanczos approximation, g = 607/128, 15 terms).
/// Relative error is below 1e-13 on (0, 10]. Throws std::domain_error for
/// x <= 0.
double gamma_fn(double x);

}  // namespace fracosc
