#include "llfw/soliton1d.hpp"

#include <cmath>
#include <stdexcept>

#include "llfw/spectral.hpp"

namespace llfw {

namespace {

void require_subunit(double c) {
    if (!(c >= 0.0 && c < 1.0))
        throw std::invalid_argument("profile: only trivial solutions exist for c >= 1");
}

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

std::array<double, 3> Profile1D::operator()(double x) const {
    const double s = sech(k * x);
    return {c * s, std::tanh(k * x), k * s};
}

std::array<double, 3> Profile1D::derivative(double x) const {
    const double s = sech(k * x);
    const double t = std::tanh(k * x);
    return {-c * k * s * t, k * s * s, -k * k * s * t};
}

double Profile1D::theta(double x) const {
    if (!(c > 0.0)) throw std::invalid_argument("phase: lifting degenerate at c = 0");
    return std::atan(std::sinh(k * x) / c);
}

double Profile1D::theta_prime(double x) const {
    if (!(c > 0.0)) throw std::invalid_argument("phase: lifting degenerate at c = 0");
    const double sh = std::sinh(k * x);
    return c * k * std::cosh(k * x) / (c * c + sh * sh);
}

Profile1D make_profile(double c) {
    require_subunit(c);
    return Profile1D{c, std::sqrt(1.0 - c * c)};
}

std::array<double, 3> profile(double c, double x) { return make_profile(c)(x); }

double phase(double c, double x) { return make_profile(c).theta(x); }

double energy_closed(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("energy_closed: c in [0,1]");
    return 2.0 * std::sqrt(1.0 - c * c);
}

double momentum_closed(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("momentum_closed: c in (0,1)");
    return 2.0 * std::atan(std::sqrt(1.0 - c * c) / c);
}

std::vector<EpRow> ep_curve(const std::vector<double>& c_values) {
    if (c_values.empty()) throw std::invalid_argument("ep_curve: empty speed list");
    std::vector<EpRow> rows;
    rows.reserve(c_values.size());
    for (double c : c_values) {
        EpRow row;
        row.c = c;
        row.energy = energy_closed(c);
        row.momentum = momentum_closed(c);
        row.energy_pred = 2.0 * std::sin(0.5 * row.momentum);
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> centered_dEdp(const std::vector<EpRow>& rows) {
    std::vector<double> d(rows.size(), std::nan(""));
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        d[i] = (rows[i + 1].energy - rows[i - 1].energy) /
               (rows[i + 1].momentum - rows[i - 1].momentum);
    return d;
}

std::vector<double> speeds_uniform_momentum(double cmin, double cmax, int count) {
    if (count < 2 || !(cmin > 0.0 && cmax < 1.0 && cmin < cmax))
        throw std::invalid_argument("speeds_uniform_momentum: need 0 < cmin < cmax < 1");
    const double phi = momentum_closed(cmax);
    const double plo = momentum_closed(cmin);  // momentum decreases with c
    std::vector<double> speeds(count);
    for (int i = 0; i < count; ++i) {
        const double p = plo + (phi - plo) * static_cast<double>(i) / (count - 1);
        speeds[i] = std::cos(0.5 * p);
    }
    return speeds;
}

double quadrature_energy(double c, const Grid& grid) {
    const Profile1D pr = make_profile(c);
    ScalarSamples density = sample(grid, std::function<double(double)>([&](double x) {
        const auto du = pr.derivative(x);
        const auto u = pr(x);
        return 0.5 * (du[0] * du[0] + du[1] * du[1] + du[2] * du[2] + u[2] * u[2]);
    }));
    return integrate(density);
}

double quadrature_momentum(double c, const Grid& grid) {
    const Profile1D pr = make_profile(c);
    if (!(c > 0.0)) throw std::invalid_argument("quadrature_momentum: c in (0,1)");
    ScalarSamples density = sample(grid, std::function<double(double)>([&](double x) {
        return pr(x)[2] * pr.theta_prime(x);
    }));
    return integrate(density);
}

double quadrature_u3_power(double c, const Grid& grid, int power) {
    const Profile1D pr = make_profile(c);
    ScalarSamples density = sample(grid, std::function<double(double)>([&](double x) {
        return std::pow(pr(x)[2], power);
    }));
    return integrate(density);
}

void sample_pair_profile(double c, const Grid& grid, ScalarSamples& u1, ScalarSamples& u2,
                         ScalarSamples& u3) {
    require_subunit(c);
    if (grid.dim != 1) throw std::invalid_argument("sample_pair_profile: 1d grid expected");
    const double k = std::sqrt(1.0 - c * c);
    const double L = grid.length[0];
    u1 = zeros(grid);
    u2 = zeros(grid);
    u3 = zeros(grid);
    for (std::size_t i = 0; i < grid.n[0]; ++i) {
        const double x = grid.coord(0, i);
        const double s0 = sech(k * x);
        const double sp = sech(k * (x - 0.5 * L));
        const double sm = sech(k * (x + 0.5 * L));
        double a = c * (s0 + sp + sm);
        double b = std::tanh(k * x) - std::tanh(k * (x - 0.5 * L)) - std::tanh(k * (x + 0.5 * L));
        double d = k * (s0 - sp - sm);
        const double norm = std::sqrt(a * a + b * b + d * d);
        u1.values[i] = a / norm;
        u2.values[i] = b / norm;
        u3.values[i] = d / norm;
    }
}

Residual1D residual_system_1d(double c, const ScalarSamples& u1, const ScalarSamples& u2,
                              const ScalarSamples& u3) {
    const Grid& g = u1.grid;
    if (g.dim != 1) throw std::invalid_argument("residual_system_1d: 1d grid expected");
    const Symbol lap = [](double xi1, double) { return -xi1 * xi1; };
    const ScalarSamples d1 = spectral_gradient(u1, 0);
    const ScalarSamples d2 = spectral_gradient(u2, 0);
    const ScalarSamples d3 = spectral_gradient(u3, 0);
    const ScalarSamples l1 = apply_multiplier(u1, lap);
    const ScalarSamples l2 = apply_multiplier(u2, lap);
    const ScalarSamples l3 = apply_multiplier(u3, lap);

    Residual1D out;
    const double mc2 = 1.0 - c * c;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double e = 0.5 * (d1.values[i] * d1.values[i] + d2.values[i] * d2.values[i] +
                                d3.values[i] * d3.values[i] + u3.values[i] * u3.values[i]);
        const double r1 = -l1.values[i] - 2.0 * e * u1.values[i] -
                          c * (u2.values[i] * d3.values[i] - u3.values[i] * d2.values[i]);
        const double r2 = -l2.values[i] - 2.0 * e * u2.values[i] -
                          c * (u3.values[i] * d1.values[i] - u1.values[i] * d3.values[i]);
        const double r3 = -l3.values[i] - 2.0 * e * u3.values[i] + u3.values[i] -
                          c * (u1.values[i] * d2.values[i] - u2.values[i] * d1.values[i]);
        out.r1 = std::max(out.r1, std::fabs(r1));
        out.r2 = std::max(out.r2, std::fabs(r2));
        out.r3 = std::max(out.r3, std::fabs(r3));
        const double grad2 = d1.values[i] * d1.values[i] + d2.values[i] * d2.values[i] +
                             d3.values[i] * d3.values[i];
        out.first_integral =
            std::max(out.first_integral, std::fabs(grad2 - u3.values[i] * u3.values[i]));
        const double u3sq = u3.values[i] * u3.values[i];
        out.u3_integral = std::max(
            out.u3_integral, std::fabs(d3.values[i] * d3.values[i] - u3sq * (mc2 - u3sq)));
    }
    return out;
}

Residual1D residual_1d(double c, const Grid& grid) {
    require_subunit(c);
    const double k = std::sqrt(1.0 - c * c);
    if (grid.length[0] * k < 40.0)
        throw std::invalid_argument("residual_1d: grid too small for the decay scale");
    ScalarSamples u1, u2, u3;
    sample_pair_profile(c, grid, u1, u2, u3);
    return residual_system_1d(c, u1, u2, u3);
}

}  // namespace llfw
