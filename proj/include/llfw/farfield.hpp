#pragma once

#include <complex>
#include <string>
#include <vector>

#include "llfw/field.hpp"
#include "llfw/fit.hpp"
#include "llfw/grid.hpp"

namespace llfw {

/// Leading far-field data of a finite-energy 2d wave:
///   alpha = (1/2pi) (1-c^2)^{-1/2} (2c int e(u) u3 - (1-c^2) int G1)
///   beta2 = -(1/2pi) (1-c^2)^{ 1/2} int G2
/// and the limit phase lambda_inf, estimated as the circular mean of
/// arg(u1 + i u2) on the outermost reliable annulus.
struct FarFieldCoefficients {
    double alpha = 0.0;
    double beta2 = 0.0;
    std::complex<double> lambda_inf{1.0, 0.0};
};

FarFieldCoefficients alpha_beta(const Field& f, double margin = kDefaultLiftingMargin);

/// Asymptotic profiles over unit directions sigma, with q = 1-c^2+c^2 s1^2:
///   u_check_inf = (alpha s1 + beta2 s2) / q
///   u3_inf      = alpha c (1/q - 2 s1^2/q^2) - beta2 2 c s1 s2 / q^2
struct FarFieldPrediction {
    double u_check_inf = 0.0;
    double u3_inf = 0.0;
};
FarFieldPrediction predicted_farfield(const FarFieldCoefficients& co, double c, double s1,
                                      double s2);

/// Interpolated samples of R (u_check(R sigma) - lambda)/(i lambda) (real
/// part) and R^2 u3(R sigma) per radius and direction.
struct FarFieldSamples {
    std::vector<double> radii;
    std::vector<double> angles;
    std::vector<std::vector<double>> u_check;  // [radius][direction]
    std::vector<std::vector<double>> u3;
};
FarFieldSamples measure_farfield(const Field& f, const std::vector<double>& radii, int ndir,
                                 std::complex<double> lambda);

/// Radii inside 40% of the half-box stay clear of the periodic images.
double reliable_radius(const Grid& grid);

enum class FarQuantity { U3, GradTheta, GradU3 };
std::string far_quantity_name(FarQuantity q);

/// Log-log decay fit of a named field quantity over 8 log-spaced annuli
/// in [0.15, 0.4] of the half-box.  Requires the signal at the outermost
/// annulus to sit below 1e-3 of its peak.
DecayFit decay_fit(const Field& f, FarQuantity quantity, double margin = kDefaultLiftingMargin);

/// Fit of arbitrary samples with the same annulus policy (test oracles).
DecayFit decay_fit_samples(const ScalarSamples& s, const std::string& name);

/// |u_check_inf(sigma) computed from the per-component phase limits
/// theta^j_inf summed per the proof chain - the direct closed form|.
double theta_route_check(const FarFieldCoefficients& co, double c, double s1, double s2);

}  // namespace llfw
