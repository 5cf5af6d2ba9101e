#pragma once

#include <vector>

namespace llfw {

/// Gamma function via the Lanczos series (g = 7, 9 terms), with the
/// reflection formula for x < 1/2.  Accurate to ~1e-14 relative on the
/// arguments used here; validated against Gamma(1/2) = sqrt(pi) in tests.
double gamma_fn(double x);

double beta_fn(double a, double b);

/// Gauss-Legendre nodes and weights on [a, b].
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Quadrature gauss_legendre(int n, double a, double b);

}  // namespace llfw
