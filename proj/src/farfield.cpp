#include "llfw/farfield.hpp"

#include <cmath>
#include <stdexcept>

#include "llfw/diagnostics.hpp"
#include "llfw/kernels.hpp"
#include "llfw/solver2d.hpp"
#include "llfw/spectral.hpp"

namespace llfw {

double reliable_radius(const Grid& grid) {
    return 0.4 * 0.5 * std::min(grid.length[0], grid.dim == 2 ? grid.length[1] : grid.length[0]);
}

FarFieldCoefficients alpha_beta(const Field& f, double margin) {
    if (f.grid.dim != 2) throw std::invalid_argument("alpha_beta: 2d fields only");
    if (!(f.c > 0.0 && f.c < 1.0)) throw std::invalid_argument("alpha_beta: c in (0,1)");
    const LiftedField lf = lift(f, margin);
    const SourceTerms st = compute_FG(lf, margin);

    // e(u) u3 with the full energy density
    ScalarSamples density = zeros(f.grid);
    for (int comp = 0; comp < 3; ++comp) {
        const ScalarSamples& u = comp == 0 ? f.u1 : comp == 1 ? f.u2 : f.u3;
        for (int axis = 0; axis < 2; ++axis) {
            const ScalarSamples d = spectral_gradient(u, axis);
            for (std::size_t i = 0; i < f.grid.size(); ++i)
                density.values[i] += d.values[i] * d.values[i];
        }
    }
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        density.values[i] =
            0.5 * (density.values[i] + f.u3.values[i] * f.u3.values[i]) * f.u3.values[i];

    const double int_eu3 = integrate(density);
    const double int_g1 = integrate(st.G[0]);
    const double int_g2 = integrate(st.G[1]);
    const double mc2 = 1.0 - f.c * f.c;

    FarFieldCoefficients co;
    co.alpha = (2.0 * f.c * int_eu3 - mc2 * int_g1) / (2.0 * M_PI * std::sqrt(mc2));
    co.beta2 = -std::sqrt(mc2) * int_g2 / (2.0 * M_PI);

    // circular mean of the phase on the outermost reliable annulus
    const double r_hi = reliable_radius(f.grid);
    const double r_lo = 0.9 * r_hi;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t iy = 0; iy < f.grid.n[1]; ++iy)
        for (std::size_t ix = 0; ix < f.grid.n[0]; ++ix) {
            const double r = std::hypot(f.grid.coord(0, ix), f.grid.coord(1, iy));
            if (r < r_lo || r > r_hi) continue;
            const std::size_t i = f.grid.index(ix, iy);
            const std::complex<double> u{f.u1.values[i], f.u2.values[i]};
            const double mag = std::abs(u);
            if (mag > 0.0) acc += u / mag;
        }
    co.lambda_inf = std::abs(acc) > 0.0 ? acc / std::abs(acc) : std::complex<double>{1.0, 0.0};
    return co;
}

FarFieldPrediction predicted_farfield(const FarFieldCoefficients& co, double c, double s1,
                                      double s2) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("predicted_farfield: c in (0,1)");
    if (std::fabs(s1 * s1 + s2 * s2 - 1.0) > 1e-8)
        throw std::invalid_argument("predicted_farfield: direction must be unit");
    const double q = 1.0 - c * c + c * c * s1 * s1;
    FarFieldPrediction out;
    out.u_check_inf = (co.alpha * s1 + co.beta2 * s2) / q;
    out.u3_inf = co.alpha * c * (1.0 / q - 2.0 * s1 * s1 / (q * q)) -
                 co.beta2 * 2.0 * c * s1 * s2 / (q * q);
    return out;
}

FarFieldSamples measure_farfield(const Field& f, const std::vector<double>& radii, int ndir,
                                 std::complex<double> lambda) {
    if (f.grid.dim != 2) throw std::invalid_argument("measure_farfield: 2d fields only");
    if (ndir < 1) throw std::invalid_argument("measure_farfield: ndir >= 1");
    const double r_max = reliable_radius(f.grid);
    FarFieldSamples out;
    out.radii = radii;
    out.angles.resize(ndir);
    for (int d = 0; d < ndir; ++d) out.angles[d] = 2.0 * M_PI * d / ndir;
    out.u_check.assign(radii.size(), std::vector<double>(ndir, 0.0));
    out.u3.assign(radii.size(), std::vector<double>(ndir, 0.0));
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const double r = radii[ri];
        if (!(r > 0.0) || r > r_max)
            throw std::invalid_argument("measure_farfield: radius outside reliable region");
        for (int d = 0; d < ndir; ++d) {
            const double x = r * std::cos(out.angles[d]);
            const double y = r * std::sin(out.angles[d]);
            const std::complex<double> uc{interp_periodic(f.u1, x, y),
                                          interp_periodic(f.u2, x, y)};
            const std::complex<double> scaled =
                r * (uc - lambda) / (std::complex<double>{0.0, 1.0} * lambda);
            out.u_check[ri][d] = scaled.real();
            out.u3[ri][d] = r * r * interp_periodic(f.u3, x, y);
        }
    }
    return out;
}

std::string far_quantity_name(FarQuantity q) {
    switch (q) {
        case FarQuantity::U3: return "u3";
        case FarQuantity::GradTheta: return "grad_theta";
        case FarQuantity::GradU3: return "grad_u3";
    }
    return "?";
}

DecayFit decay_fit_samples(const ScalarSamples& s, const std::string& name) {
    const double half = 0.5 * std::min(s.grid.length[0], s.grid.length[1]);
    const auto boundaries = log_spaced(0.15 * half, 0.4 * half, 9);
    std::vector<double> radii, maxima;
    annulus_max_profile(s, boundaries, radii, maxima);
    const double peak = max_abs(s);
    if (!(peak > 0.0) || maxima.back() > 1e-3 * peak)
        throw std::runtime_error("decay_fit: insufficient decay range for " + name);
    return power_law_fit(name, radii, maxima);
}

DecayFit decay_fit(const Field& f, FarQuantity quantity, double margin) {
    if (f.grid.dim != 2) throw std::invalid_argument("decay_fit: 2d fields only");
    ScalarSamples q = zeros(f.grid);
    switch (quantity) {
        case FarQuantity::U3:
            q = f.u3;
            break;
        case FarQuantity::GradTheta: {
            const LiftedField lf = lift(f, margin);
            const ScalarSamples d1 = spectral_gradient(lf.theta, 0);
            const ScalarSamples d2 = spectral_gradient(lf.theta, 1);
            for (std::size_t i = 0; i < f.grid.size(); ++i)
                q.values[i] = std::hypot(d1.values[i], d2.values[i]);
            break;
        }
        case FarQuantity::GradU3: {
            const ScalarSamples d1 = spectral_gradient(f.u3, 0);
            const ScalarSamples d2 = spectral_gradient(f.u3, 1);
            for (std::size_t i = 0; i < f.grid.size(); ++i)
                q.values[i] = std::hypot(d1.values[i], d2.values[i]);
            break;
        }
    }
    return decay_fit_samples(q, far_quantity_name(quantity));
}

double theta_route_check(const FarFieldCoefficients& co, double c, double s1, double s2) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("theta_route_check: c in (0,1)");
    if (std::fabs(s1 * s1 + s2 * s2 - 1.0) > 1e-8)
        throw std::invalid_argument("theta_route_check: direction must be unit");
    const double mc2 = 1.0 - c * c;
    // invert the coefficient formulas for the source integrals; the split of
    // the alpha combination between int F and int G1 is free and must drop
    // out of the route (that cancellation is the point of the check)
    const double a_comb = 2.0 * M_PI * std::sqrt(mc2) * co.alpha;  // c int F - int G1
    const double int_g1 = 1.0 / 3.0;
    const double int_g2 = -2.0 * M_PI * co.beta2 / std::sqrt(mc2);
    const double int_f = (a_comb + int_g1) / c;

    double theta_inf = 0.0;
    for (int j = 1; j <= 2; ++j) {
        const double sj = j == 1 ? s1 : s2;
        double tj = c * make_limit(LimitKind::LcjInf, c, j).eval(s1, s2) * int_f;
        for (int k = 1; k <= 2; ++k) {
            const double int_gk = k == 1 ? int_g1 : int_g2;
            tj -= (c * c * make_limit(LimitKind::TcjkInf, c, j, k).eval(s1, s2) +
                   make_limit(LimitKind::RieszInf, 0.0, j, k).eval(s1, s2)) *
                  int_gk;
        }
        theta_inf -= sj * tj;  // u_check_inf = -(1/(N-1)) sum_j sigma_j theta^j_inf
    }
    const double direct = predicted_farfield(co, c, s1, s2).u_check_inf;
    return std::fabs(theta_inf - direct);
}

}  // namespace llfw
