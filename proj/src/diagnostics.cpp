#include "llfw/diagnostics.hpp"

#include <stdexcept>

#include "llfw/solver2d.hpp"
#include "llfw/spectral.hpp"

namespace llfw {

namespace {

struct PolarParts {
    ScalarSamples rho;
    ScalarSamples dtheta1, dtheta2;
    ScalarSamples du3_1, du3_2;
    ScalarSamples drho1, drho2;
    ScalarSamples e;  // (1/2)(|grad u3|^2 + |grad rho|^2 + rho^2 |grad theta|^2 + u3^2)
};

PolarParts polar_parts(const LiftedField& lf) {
    const Grid& g = lf.grid;
    PolarParts p;
    p.rho = zeros(g);
    p.e = zeros(g);
    for (std::size_t i = 0; i < g.size(); ++i)
        p.rho.values[i] = std::sqrt(std::max(0.0, 1.0 - lf.u3.values[i] * lf.u3.values[i]));
    p.dtheta1 = spectral_gradient(lf.theta, 0);
    p.du3_1 = spectral_gradient(lf.u3, 0);
    p.drho1 = spectral_gradient(p.rho, 0);
    if (g.dim == 2) {
        p.dtheta2 = spectral_gradient(lf.theta, 1);
        p.du3_2 = spectral_gradient(lf.u3, 1);
        p.drho2 = spectral_gradient(p.rho, 1);
    } else {
        p.dtheta2 = zeros(g);
        p.du3_2 = zeros(g);
        p.drho2 = zeros(g);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double gth = p.dtheta1.values[i] * p.dtheta1.values[i] +
                           p.dtheta2.values[i] * p.dtheta2.values[i];
        const double gu3 =
            p.du3_1.values[i] * p.du3_1.values[i] + p.du3_2.values[i] * p.du3_2.values[i];
        const double grho =
            p.drho1.values[i] * p.drho1.values[i] + p.drho2.values[i] * p.drho2.values[i];
        const double rho2 = p.rho.values[i] * p.rho.values[i];
        p.e.values[i] =
            0.5 * (gu3 + grho + rho2 * gth + lf.u3.values[i] * lf.u3.values[i]);
    }
    return p;
}

}  // namespace

double energy(const Field& f) {
    ScalarSamples density = zeros(f.grid);
    for (int comp = 0; comp < 3; ++comp) {
        const ScalarSamples& u = comp == 0 ? f.u1 : comp == 1 ? f.u2 : f.u3;
        for (int axis = 0; axis < f.grid.dim; ++axis) {
            const ScalarSamples d = spectral_gradient(u, axis);
            for (std::size_t i = 0; i < f.grid.size(); ++i)
                density.values[i] += d.values[i] * d.values[i];
        }
    }
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        density.values[i] = 0.5 * (density.values[i] + f.u3.values[i] * f.u3.values[i]);
    return integrate(density);
}

double momentum_lifted(const LiftedField& lf) {
    const ScalarSamples dtheta = spectral_gradient(lf.theta, 0);
    ScalarSamples density = zeros(lf.grid);
    for (std::size_t i = 0; i < lf.grid.size(); ++i)
        density.values[i] = lf.u3.values[i] * dtheta.values[i];
    return integrate(density);
}

double momentum_density(const Field& f) {
    if (f.grid.dim != 2) throw std::invalid_argument("momentum_density: 2d fields only");
    const std::array<const ScalarSamples*, 3> u{&f.u1, &f.u2, &f.u3};
    std::array<ScalarSamples, 3> d1, d2;
    for (int comp = 0; comp < 3; ++comp) {
        d1[comp] = spectral_gradient(*u[comp], 0);
        d2[comp] = spectral_gradient(*u[comp], 1);
    }
    ScalarSamples density = zeros(f.grid);
    for (std::size_t iy = 0; iy < f.grid.n[1]; ++iy) {
        const double x2 = f.grid.coord(1, iy);
        for (std::size_t ix = 0; ix < f.grid.n[0]; ++ix) {
            const std::size_t i = f.grid.index(ix, iy);
            const double cx = d1[1].values[i] * d2[2].values[i] - d1[2].values[i] * d2[1].values[i];
            const double cy = d1[2].values[i] * d2[0].values[i] - d1[0].values[i] * d2[2].values[i];
            const double cz = d1[0].values[i] * d2[1].values[i] - d1[1].values[i] * d2[0].values[i];
            const double w2 = u[0]->values[i] * cx + u[1]->values[i] * cy + u[2]->values[i] * cz;
            density.values[i] = -x2 * w2;
        }
    }
    return integrate(density);
}

PohozaevReport pohozaev_report(const Field& f, double margin) {
    const double e = energy(f);
    ScalarSamples d1sq = zeros(f.grid);
    for (int comp = 0; comp < 3; ++comp) {
        const ScalarSamples& u = comp == 0 ? f.u1 : comp == 1 ? f.u2 : f.u3;
        const ScalarSamples d = spectral_gradient(u, 0);
        for (std::size_t i = 0; i < f.grid.size(); ++i)
            d1sq.values[i] += d.values[i] * d.values[i];
    }
    PohozaevReport rep;
    rep.poh2 = std::fabs(e - integrate(d1sq)) / (e + 1.0);
    rep.poh3 = std::nan("");
    if (f.grid.dim == 2) {
        ScalarSamples u3sq = zeros(f.grid);
        for (std::size_t i = 0; i < f.grid.size(); ++i)
            u3sq.values[i] = f.u3.values[i] * f.u3.values[i];
        try {
            const LiftedField lf = lift(f, margin);
            rep.poh3 = std::fabs(integrate(u3sq) - f.c * momentum_lifted(lf)) / (e + 1.0);
        } catch (const std::runtime_error&) {
            // vortex present: poh3 stays NaN
        }
    }
    return rep;
}

IdentityReport identity_report(const LiftedField& lf) {
    const PolarParts p = polar_parts(lf);
    const Grid& g = lf.grid;
    const double c = lf.c;

    ScalarSamples a = zeros(g), b = zeros(g);
    IdentityReport rep;

    for (std::size_t i = 0; i < g.size(); ++i) {
        const double rho = p.rho.values[i];
        const double rho2 = rho * rho;
        const double gth = p.dtheta1.values[i] * p.dtheta1.values[i] +
                           p.dtheta2.values[i] * p.dtheta2.values[i];
        a.values[i] = rho2 * gth;
        b.values[i] = lf.u3.values[i] * p.dtheta1.values[i];
    }
    rep.i1.lhs = integrate(a);
    rep.i1.rhs = c * integrate(b);

    for (std::size_t i = 0; i < g.size(); ++i) {
        const double rho = p.rho.values[i];
        const double rho2 = rho * rho;
        const double u3 = lf.u3.values[i];
        const double gth = p.dtheta1.values[i] * p.dtheta1.values[i] +
                           p.dtheta2.values[i] * p.dtheta2.values[i];
        const double grho = p.drho1.values[i] * p.drho1.values[i] +
                            p.drho2.values[i] * p.drho2.values[i];
        a.values[i] = grho + rho2 * gth;
        b.values[i] = 2.0 * p.e.values[i] * rho2 - c * u3 * rho2 * p.dtheta1.values[i];
    }
    rep.i2.lhs = integrate(a);
    rep.i2.rhs = integrate(b);

    for (std::size_t i = 0; i < g.size(); ++i) {
        const double rho = p.rho.values[i];
        const double u3 = lf.u3.values[i];
        const double u32 = u3 * u3;
        const double gth = p.dtheta1.values[i] * p.dtheta1.values[i] +
                           p.dtheta2.values[i] * p.dtheta2.values[i];
        const double grho = p.drho1.values[i] * p.drho1.values[i] +
                            p.drho2.values[i] * p.drho2.values[i];
        a.values[i] = 2.0 * rho * grho + 2.0 * p.e.values[i] * u32 * rho;
        b.values[i] = rho * u32 * gth + c * rho * u32 * u3 * p.dtheta1.values[i];
    }
    rep.i2b.lhs = integrate(a);
    rep.i2b.rhs = integrate(b);

    for (std::size_t i = 0; i < g.size(); ++i) {
        const double rho2 = p.rho.values[i] * p.rho.values[i];
        const double u3 = lf.u3.values[i];
        const double gu3 = p.du3_1.values[i] * p.du3_1.values[i] +
                           p.du3_2.values[i] * p.du3_2.values[i];
        a.values[i] = gu3 + u3 * u3;
        b.values[i] = 2.0 * p.e.values[i] * u3 * u3 + c * rho2 * u3 * p.dtheta1.values[i];
    }
    rep.i3.lhs = integrate(a);
    rep.i3.rhs = integrate(b);
    return rep;
}

InequalityReport inequality_report(const LiftedField& lf) {
    const PolarParts p = polar_parts(lf);
    const Grid& g = lf.grid;
    const double c = lf.c;

    InequalityReport rep;
    rep.delta = max_abs(lf.u3);
    const bool standing = rep.delta <= 0.5 && c > 0.0 && c <= 1.0;
    const bool two_d = g.dim == 2;

    const double energy_total = integrate(p.e);
    const double u3_l4 = lp_norm(lf.u3, 4.0);
    const double u3_l4_4 = u3_l4 * u3_l4 * u3_l4 * u3_l4;
    const double u3_l2 = l2_norm(lf.u3);

    rep.chiron54 = {u3_l4, 54.0 * rep.delta * energy_total, standing && two_d};
    rep.energy_l4 = {energy_total, 10.0 * u3_l4_4, standing && two_d};

    ScalarSamples phi2 = zeros(g), th2 = zeros(g), grho = zeros(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double phi = p.dtheta1.values[i] - c * lf.u3.values[i];
        phi2.values[i] = phi * phi;
        th2.values[i] = p.dtheta2.values[i] * p.dtheta2.values[i];
        grho.values[i] = p.drho1.values[i] * p.drho1.values[i] +
                         p.drho2.values[i] * p.drho2.values[i];
    }
    rep.phi94 = {integrate(phi2) + integrate(th2), 2.25 * u3_l4_4, standing && two_d};
    rep.rho6 = {integrate(grho), 6.0 * u3_l4_4, standing && two_d};
    rep.l2_bound = {energy_total, 3.0 * u3_l2 * u3_l2, false};

    const double root = std::sqrt(std::max(1e-300, 1.0 - rep.delta * rep.delta));
    double worst = -1e300;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double lhs = std::fabs(lf.u3.values[i] * p.dtheta1.values[i]);
        worst = std::max(worst, lhs - p.e.values[i] / root);
    }
    rep.polar_pointwise_max = worst;
    return rep;
}

DiagnosticsReport diagnose(const Field& f, double margin) {
    DiagnosticsReport rep;
    rep.c = f.c;
    rep.energy = energy(f);
    rep.u3_linf = max_abs(f.u3);
    rep.u3_l2 = l2_norm(f.u3);
    rep.u3_l4 = lp_norm(f.u3, 4.0);
    rep.residual_pde = residual(f);
    rep.tolerance = std::max(1e-8, 50.0 * rep.residual_pde);
    rep.pohozaev = pohozaev_report(f, margin);
    rep.momentum_density = f.grid.dim == 2 ? momentum_density(f) : std::nan("");
    rep.momentum_lifted = std::nan("");
    try {
        const LiftedField lf = lift(f, margin);
        rep.momentum_lifted = momentum_lifted(lf);
        rep.identities = identity_report(lf);
        rep.inequalities = inequality_report(lf);
        rep.lifted = true;
    } catch (const std::runtime_error&) {
        rep.lifted = false;
    }
    return rep;
}

}  // namespace llfw
