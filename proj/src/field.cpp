#include "llfw/field.hpp"

#include <cmath>
#include <stdexcept>

namespace llfw {

Field make_constant_field(const Grid& grid, double c) {
    Field f{grid, c, zeros(grid), zeros(grid), zeros(grid)};
    for (double& v : f.u1.values) v = 1.0;
    return f;
}

double sphere_defect(const Field& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        const double n2 = f.u1.values[i] * f.u1.values[i] + f.u2.values[i] * f.u2.values[i] +
                          f.u3.values[i] * f.u3.values[i];
        worst = std::max(worst, std::fabs(n2 - 1.0));
    }
    return worst;
}

void renormalize(Field& f) {
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        const double n = std::sqrt(f.u1.values[i] * f.u1.values[i] +
                                   f.u2.values[i] * f.u2.values[i] +
                                   f.u3.values[i] * f.u3.values[i]);
        if (!(n > 0.0)) throw std::runtime_error("renormalize: zero vector sample");
        f.u1.values[i] /= n;
        f.u2.values[i] /= n;
        f.u3.values[i] /= n;
    }
}

Field reconstruct(const LiftedField& lf, bool renorm) {
    Field f{lf.grid, lf.c, zeros(lf.grid), zeros(lf.grid), lf.u3};
    for (std::size_t i = 0; i < lf.grid.size(); ++i) {
        const double u3 = lf.u3.values[i];
        if (std::fabs(u3) > 1.0) throw std::runtime_error("reconstruct: |u3| > 1");
        const double rho = std::sqrt(1.0 - u3 * u3);
        f.u1.values[i] = rho * std::cos(lf.theta.values[i]);
        f.u2.values[i] = rho * std::sin(lf.theta.values[i]);
    }
    if (renorm) renormalize(f);
    return f;
}

namespace {

// difference folded into (-pi, pi]
double wrap(double d) {
    while (d > M_PI) d -= 2.0 * M_PI;
    while (d <= -M_PI) d += 2.0 * M_PI;
    return d;
}

}  // namespace

LiftedField lift(const Field& f, double margin) {
    if (sphere_defect(f) > 1e-8)
        throw std::invalid_argument("lift: field is off the unit sphere; renormalize first");
    const Grid& g = f.grid;
    for (double v : f.u3.values)
        if (std::fabs(v) > 1.0 - margin)
            throw std::runtime_error("lift: vortex present (|u3| exceeds 1 - margin)");

    LiftedField lf{g, f.c, f.u3, zeros(g)};
    ScalarSamples raw = zeros(g);
    for (std::size_t i = 0; i < g.size(); ++i)
        raw.values[i] = std::atan2(f.u2.values[i], f.u1.values[i]);

    const std::size_t nx = g.n[0];
    const std::size_t ny = g.dim == 2 ? g.n[1] : 1;
    auto& th = lf.theta.values;
    th[0] = raw.values[0];
    for (std::size_t ix = 1; ix < nx; ++ix)
        th[ix] = th[ix - 1] + wrap(raw.values[ix] - raw.values[ix - 1]);
    for (std::size_t iy = 1; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix)
            th[g.index(ix, iy)] =
                th[g.index(ix, iy - 1)] +
                wrap(raw.values[g.index(ix, iy)] - raw.values[g.index(ix, iy - 1)]);

    if (g.dim == 2) {
        // zero plaquette winding is guaranteed on a simply connected box
        // with |u3| < 1; a violation means the unwrapping is inconsistent
        for (std::size_t iy = 0; iy + 1 < ny; ++iy)
            for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
                const double w = wrap(raw.values[g.index(ix + 1, iy)] - raw.values[g.index(ix, iy)]) +
                                 wrap(raw.values[g.index(ix + 1, iy + 1)] - raw.values[g.index(ix + 1, iy)]) +
                                 wrap(raw.values[g.index(ix, iy + 1)] - raw.values[g.index(ix + 1, iy + 1)]) +
                                 wrap(raw.values[g.index(ix, iy)] - raw.values[g.index(ix, iy + 1)]);
                if (std::fabs(w) > 1e-6)
                    throw std::runtime_error("lift: nonzero plaquette winding (vortex present)");
            }
    }
    return lf;
}

}  // namespace llfw
