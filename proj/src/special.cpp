#include "llfw/special.hpp"

#include <cmath>
#include <stdexcept>

namespace llfw {

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("gamma_fn: requires x > 0");
    // reflection keeps the series argument away from the poles
    if (x < 0.5) return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    const double z = x - 1.0;
    double series = coef[0];
    for (int i = 1; i < 9; ++i) series += coef[i] / (z + static_cast<double>(i));
    const double t = z + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

double beta_fn(double a, double b) { return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b); }

Quadrature gauss_legendre(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("gauss_legendre: n >= 2");
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        q.nodes[i] = 0.5 * (b - a) * x + 0.5 * (a + b);
        q.weights[i] = (b - a) / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

}  // namespace llfw
