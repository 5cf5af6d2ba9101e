#include "llfw/solver2d.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "llfw/kernels.hpp"
#include "llfw/soliton1d.hpp"
#include "llfw/spectral.hpp"

namespace llfw {

namespace {

double max_abs_u3(const LiftedField& lf) { return max_abs(lf.u3); }

struct FieldDerivatives {
    std::array<ScalarSamples, 3> d1;  // d/dx1 of u1,u2,u3
    std::array<ScalarSamples, 3> d2;  // d/dx2 (zeros for 1d)
    ScalarSamples e;                  // energy density
};

FieldDerivatives derive(const Field& f) {
    FieldDerivatives fd{{spectral_gradient(f.u1, 0), spectral_gradient(f.u2, 0),
                         spectral_gradient(f.u3, 0)},
                        {zeros(f.grid), zeros(f.grid), zeros(f.grid)},
                        zeros(f.grid)};
    if (f.grid.dim == 2) {
        fd.d2 = {spectral_gradient(f.u1, 1), spectral_gradient(f.u2, 1),
                 spectral_gradient(f.u3, 1)};
    }
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        double grad2 = 0.0;
        for (int comp = 0; comp < 3; ++comp) {
            grad2 += fd.d1[comp].values[i] * fd.d1[comp].values[i];
            grad2 += fd.d2[comp].values[i] * fd.d2[comp].values[i];
        }
        fd.e.values[i] = 0.5 * (grad2 + f.u3.values[i] * f.u3.values[i]);
    }
    return fd;
}

}  // namespace

SourceTerms compute_FG(const LiftedField& lf, double margin) {
    if (max_abs_u3(lf) > 1.0 - margin)
        throw std::runtime_error("compute_FG: lifting margin violated");
    const Field f = reconstruct(lf);
    const FieldDerivatives fd = derive(f);

    SourceTerms st{zeros(lf.grid), {zeros(lf.grid), zeros(lf.grid)}};
    for (int axis = 0; axis < lf.grid.dim; ++axis) {
        const ScalarSamples dtheta = spectral_gradient(lf.theta, axis);
        const auto& du1 = axis == 0 ? fd.d1[0] : fd.d2[0];
        const auto& du2 = axis == 0 ? fd.d1[1] : fd.d2[1];
        auto& gj = st.G[axis].values;
        for (std::size_t i = 0; i < lf.grid.size(); ++i)
            gj[i] = f.u1.values[i] * du2.values[i] - f.u2.values[i] * du1.values[i] -
                    dtheta.values[i];
    }
    for (std::size_t i = 0; i < lf.grid.size(); ++i)
        st.F.values[i] = 2.0 * fd.e.values[i] * f.u3.values[i] + lf.c * st.G[0].values[i];
    return st;
}

LiftedField iterate_once(const LiftedField& lf, double damping, bool* clipped) {
    if (!(damping > 0.0 && damping <= 1.0))
        throw std::invalid_argument("iterate_once: damping in (0, 1]");
    if (!(lf.c > 0.0 && lf.c < 1.0)) throw std::invalid_argument("iterate_once: c in (0,1)");
    if (lf.grid.dim != 2) throw std::invalid_argument("iterate_once: 2d grids only");

    const SourceTerms st = compute_FG(lf);
    SpectralTransform tr(lf.grid);
    const auto Fh = tr.forward(st.F.values);
    const auto G1h = tr.forward(st.G[0].values);
    const auto G2h = tr.forward(st.G[1].values);

    const double c = lf.c;
    std::vector<std::complex<double>> u3h(Fh.size(), 0.0), thetah(Fh.size(), 0.0);
    for (std::size_t idx = 1; idx < Fh.size(); ++idx) {
        if (tr.is_nyquist(idx)) continue;
        double xi1, xi2;
        tr.frequencies(idx, xi1, xi2);
        const double r2 = xi1 * xi1 + xi2 * xi2;
        const double D = denom(c, xi1, xi2);
        const std::complex<double> gdot = xi1 * G1h[idx] + xi2 * G2h[idx];
        u3h[idx] = (r2 * Fh[idx] - c * xi1 * gdot) / D;
        // phase system: d_j theta has symbol xi_j * V with
        // V = c xi1 F / D - (c^2 xi1^2 + D)/(r2 D) * (xi . G);
        // the mean-zero antigradient is then exactly -i V
        const std::complex<double> V =
            c * xi1 * Fh[idx] / D - (c * c * xi1 * xi1 + D) / (r2 * D) * gdot;
        thetah[idx] = std::complex<double>(0.0, -1.0) * V;
    }
    const auto u3s = tr.inverse(u3h);
    const auto ths = tr.inverse(thetah);

    LiftedField next{lf.grid, lf.c, zeros(lf.grid), zeros(lf.grid)};
    const double cap = 1.0 - kDefaultLiftingMargin;
    bool hit = false;
    for (std::size_t i = 0; i < lf.grid.size(); ++i) {
        double u3 = (1.0 - damping) * lf.u3.values[i] + damping * u3s[i];
        const double th = (1.0 - damping) * lf.theta.values[i] + damping * ths[i];
        if (!std::isfinite(u3) || !std::isfinite(th))
            throw std::runtime_error("iterate_once: nonfinite iterate (divergence)");
        if (std::fabs(u3) > cap) {
            u3 = std::copysign(cap, u3);
            hit = true;
        }
        next.u3.values[i] = u3;
        next.theta.values[i] = th;
    }
    if (clipped) *clipped = hit;
    return next;
}

double residual(const Field& f) {
    const FieldDerivatives fd = derive(f);
    const Symbol lap = [](double xi1, double xi2) { return -(xi1 * xi1 + xi2 * xi2); };
    const ScalarSamples l1 = apply_multiplier(f.u1, lap);
    const ScalarSamples l2 = apply_multiplier(f.u2, lap);
    const ScalarSamples l3 = apply_multiplier(f.u3, lap);

    const double c = f.c;
    double acc = 0.0;
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        const double e = fd.e.values[i];
        const double r1 = -l1.values[i] - 2.0 * e * f.u1.values[i] -
                          c * (f.u2.values[i] * fd.d1[2].values[i] -
                               f.u3.values[i] * fd.d1[1].values[i]);
        const double r2 = -l2.values[i] - 2.0 * e * f.u2.values[i] -
                          c * (f.u3.values[i] * fd.d1[0].values[i] -
                               f.u1.values[i] * fd.d1[2].values[i]);
        const double r3 = -l3.values[i] - 2.0 * e * f.u3.values[i] + f.u3.values[i] -
                          c * (f.u1.values[i] * fd.d1[1].values[i] -
                               f.u2.values[i] * fd.d1[0].values[i]);
        acc += r1 * r1 + r2 * r2 + r3 * r3;
    }
    double cell = f.grid.spacing[0];
    if (f.grid.dim == 2) cell *= f.grid.spacing[1];
    const double energy = integrate(fd.e);
    return std::sqrt(acc * cell) / (energy + 1.0);
}

LiftedField initial_guess(double c, const Grid& grid, InitKind kind, double amplitude) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("initial_guess: c in (0,1)");
    if (!(amplitude > 0.0 && amplitude <= 0.5))
        throw std::invalid_argument("initial_guess: amplitude in (0, 0.5]");
    if (grid.dim != 2) throw std::invalid_argument("initial_guess: 2d grids only");
    const double k2 = 1.0 - c * c;
    const double k = std::sqrt(k2);
    LiftedField lf{grid, c, zeros(grid), zeros(grid)};
    lf.u3 = sample(grid, std::function<double(double, double)>([&](double x, double y) {
        if (kind == InitKind::Bump)
            return amplitude * k2 / (std::cosh(k * x) * std::cosh(k * y));
        return amplitude * k2 / (1.0 + k2 * (x * x + y * y));
    }));
    // theta from the linearized phase balance laplace(theta) = c d1 u3
    ScalarSamples rhs = spectral_gradient(lf.u3, 0);
    for (double& v : rhs.values) v *= c;
    lf.theta = solve_poisson(rhs);
    return lf;
}

SolveResult solve(double c, const Grid& grid, const LiftedField& init, const SolveParams& params) {
    if (!(params.tol > 0.0) || params.max_iter < 0)
        throw std::invalid_argument("solve: bad parameters");
    LiftedField state = init;
    state.c = c;

    SolveResult out{reconstruct(state, params.renormalize), state, false, false, false, 0, 0.0, {}};
    double r = residual(out.field);
    out.best_residual = r;
    out.residual_history.push_back(r);
    if (r <= params.tol) {
        out.converged = true;
        return out;
    }

    double tau = params.damping;
    double r_acc = r;
    for (int it = 0; it < params.max_iter; ++it) {
        LiftedField cand{grid, c, {}, {}};
        bool hit = false;
        try {
            cand = iterate_once(state, tau, &hit);
        } catch (const std::runtime_error&) {
            out.diverged = true;
            break;
        }
        Field fc = reconstruct(cand, params.renormalize);
        const double rc = residual(fc);
        if (!std::isfinite(rc)) {
            out.diverged = true;
            break;
        }
        ++out.iterations;
        if (rc <= r_acc) {
            state = cand;
            r_acc = rc;
            out.clipped = out.clipped || hit;
            out.residual_history.push_back(rc);
            tau = std::min(params.damping, tau * 1.1);
            if (rc < out.best_residual) {
                out.best_residual = rc;
                out.field = std::move(fc);
                out.lifted = state;
            }
            if (rc <= params.tol) {
                out.converged = true;
                break;
            }
        } else {
            tau *= 0.5;
            if (tau < 1e-6) break;  // stalled against the unstable direction
        }
    }
    return out;
}

std::vector<SolveResult> continuation(double c_start, double c_end, int steps, const Grid& grid,
                                      const SolveParams& params, InitKind kind, double amplitude) {
    if (steps < 1) throw std::invalid_argument("continuation: steps >= 1");
    std::vector<SolveResult> results;
    LiftedField seed;
    bool have_seed = false;
    double c_prev = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double c = steps == 1
                             ? c_start
                             : c_start + (c_end - c_start) * static_cast<double>(i) / (steps - 1);
        LiftedField init;
        if (!have_seed) {
            init = initial_guess(c, grid, kind, amplitude);
        } else {
            // rescale the previous solution to the new decay scale
            const double ratio = std::sqrt((1.0 - c * c) / (1.0 - c_prev * c_prev));
            init = LiftedField{grid, c, zeros(grid), zeros(grid)};
            for (std::size_t iy = 0; iy < grid.n[1]; ++iy)
                for (std::size_t ix = 0; ix < grid.n[0]; ++ix) {
                    const double x = grid.coord(0, ix) * ratio;
                    const double y = grid.coord(1, iy) * ratio;
                    init.u3.values[grid.index(ix, iy)] = interp_periodic(seed.u3, x, y);
                    init.theta.values[grid.index(ix, iy)] = interp_periodic(seed.theta, x, y);
                }
        }
        results.push_back(solve(c, grid, init, params));
        if (!results.back().converged) break;
        seed = results.back().lifted;
        have_seed = true;
        c_prev = c;
    }
    return results;
}

Field extend_1d(double c, const Grid& grid2d) {
    if (grid2d.dim != 2) throw std::invalid_argument("extend_1d: 2d grid expected");
    const Grid line = make_grid(grid2d.n[0], grid2d.length[0]);
    ScalarSamples u1, u2, u3;
    sample_pair_profile(c, line, u1, u2, u3);
    Field f{grid2d, c, zeros(grid2d), zeros(grid2d), zeros(grid2d)};
    for (std::size_t iy = 0; iy < grid2d.n[1]; ++iy)
        for (std::size_t ix = 0; ix < grid2d.n[0]; ++ix) {
            const std::size_t i = grid2d.index(ix, iy);
            f.u1.values[i] = u1.values[ix];
            f.u2.values[i] = u2.values[ix];
            f.u3.values[i] = u3.values[ix];
        }
    return f;
}

}  // namespace llfw
