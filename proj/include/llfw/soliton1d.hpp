#pragma once

#include <array>
#include <vector>

#include "llfw/grid.hpp"

namespace llfw {

/// The nontrivial one-dimensional traveling wave with speed c in [0,1):
///   u1 = c sech(kx),  u2 = tanh(kx),  u3 = k sech(kx),  k = sqrt(1-c^2),
/// normalized so the peak sits at x = 0, u3 > 0 and theta(0) = 0.
struct Profile1D {
    double c = 0.0;
    double k = 1.0;  // inverse width

    std::array<double, 3> operator()(double x) const;
    std::array<double, 3> derivative(double x) const;
    double theta(double x) const;        // requires c > 0
    double theta_prime(double x) const;  // c u3 / (1 - u3^2)
};

Profile1D make_profile(double c);

std::array<double, 3> profile(double c, double x);
double phase(double c, double x);

double energy_closed(double c);    // 2 sqrt(1-c^2), c in [0,1]
double momentum_closed(double c);  // 2 arctan(sqrt(1-c^2)/c), c in (0,1)

struct EpRow {
    double c = 0.0;
    double energy = 0.0;
    double momentum = 0.0;
    double energy_pred = 0.0;  // 2 sin(p/2)
};
std::vector<EpRow> ep_curve(const std::vector<double>& c_values);

/// Centered difference dE/dp on adjacent rows; NaN at the endpoints.
std::vector<double> centered_dEdp(const std::vector<EpRow>& rows);

/// Speeds whose momenta are uniformly spaced.  On such a table the centered
/// difference dE/dp carries a uniform h^2/24 error; uniform-in-c spacing
/// degrades by an order of magnitude at the steep end of the curve.
std::vector<double> speeds_uniform_momentum(double cmin, double cmax, int count);

/// Quadrature of closed-form densities on a grid (profile centered at 0;
/// all integrands decay, so the rectangle rule is spectrally accurate).
double quadrature_energy(double c, const Grid& grid);
double quadrature_momentum(double c, const Grid& grid);
double quadrature_u3_power(double c, const Grid& grid, int power);

/// Periodic closure of the profile: the kink at x = 0 paired with its
/// reflected antikink (u1, -u2, -u3) at x = +-L/2, superposed and
/// renormalized.  Every component is then smooth and periodic with seam
/// mismatch O(e^{-kL/2}), which keeps spectral differentiation accurate;
/// the box holds two copies of the profile, so integrals double.
void sample_pair_profile(double c, const Grid& grid, ScalarSamples& u1, ScalarSamples& u2,
                         ScalarSamples& u3);

struct Residual1D {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;  // max-norm residuals of the system
    double first_integral = 0.0;          // max | |u'|^2 - u3^2 |
    double u3_integral = 0.0;             // max | (u3')^2 - u3^2((1-c^2)-u3^2) |
};

/// Residuals of sampled 1d fields under spectral differentiation.
Residual1D residual_system_1d(double c, const ScalarSamples& u1, const ScalarSamples& u2,
                              const ScalarSamples& u3);

/// Residuals of the closed-form profile on the given grid (periodic closure).
Residual1D residual_1d(double c, const Grid& grid);

}  // namespace llfw
