#include "llfw/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "llfw/special.hpp"

namespace llfw {

double denom(double c, double xi1, double xi2) {
    if (c > 1.0) throw std::invalid_argument("denom: c > 1 loses ellipticity");
    const double r2 = xi1 * xi1 + xi2 * xi2;
    return r2 * r2 + r2 - c * c * xi1 * xi1;
}

KernelSymbol make_symbol(SymbolKind kind, int dim, double c, int j, int k) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("make_symbol: dim must be 1 or 2");
    if (kind != SymbolKind::Rjk) {
        if (!(c >= 0.0) || c > 1.0)
            throw std::invalid_argument("make_symbol: require 0 <= c <= 1 for D_c kinds");
    }
    if (j < 1 || j > dim || k < 1 || k > dim)
        throw std::invalid_argument("make_symbol: axis index out of range");
    return KernelSymbol{kind, dim, c, j, k};
}

double KernelSymbol::eval(double xi1, double xi2) const {
    const double r2 = xi1 * xi1 + xi2 * xi2;
    if (r2 == 0.0) throw std::invalid_argument("KernelSymbol: undefined at the origin");
    const double comp_j = j == 1 ? xi1 : xi2;
    const double comp_k = k == 1 ? xi1 : xi2;
    switch (kind) {
        case SymbolKind::Lc:
            return r2 / denom(c, xi1, xi2);
        case SymbolKind::Lcj:
            return xi1 * comp_j / denom(c, xi1, xi2);
        case SymbolKind::Tcjk:
            return xi1 * xi1 * comp_j * comp_k / (r2 * denom(c, xi1, xi2));
        case SymbolKind::Rjk:
            return comp_j * comp_k / r2;
    }
    return 0.0;
}

Symbol as_symbol(const KernelSymbol& s) {
    return [s](double xi1, double xi2) { return s.eval(xi1, xi2); };
}

ScalarSamples apply_multiplier(const ScalarSamples& s, const KernelSymbol& m) {
    if (m.dim != s.grid.dim) throw std::invalid_argument("apply_multiplier: dim mismatch");
    return apply_multiplier(s, as_symbol(m));
}

double lc_norm_43(double c, int nodes) {
    if (!(c > 0.0) || c > 1.0) throw std::invalid_argument("lc_norm_43: require 0 < c <= 1");
    // |L_c|^{4/3} integrates radially to (3/2) (1 - c^2 cos^2 t)^{-1/3} per
    // angle; substitute t = s^3 so the c = 1 endpoint singularity t^{-2/3}
    // becomes a bounded integrand.
    const double upper = std::cbrt(0.5 * M_PI);
    const Quadrature q = gauss_legendre(nodes, 0.0, upper);
    double integral = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double s = q.nodes[i];
        const double t = s * s * s;
        const double ct = std::cos(t);
        const double base = 1.0 - c * c * ct * ct;
        integral += q.weights[i] * 3.0 * s * s / std::cbrt(base);
    }
    return std::pow(6.0 * integral, 0.75);
}

FarFieldLimit make_limit(LimitKind kind, double c, int j, int k) {
    if (kind != LimitKind::RieszInf) {
        if (!(c > 0.0 && c < 1.0))
            throw std::invalid_argument("make_limit: require c in (0,1) for D_c kinds");
    }
    if (j < 1 || j > 2 || k < 1 || k > 2)
        throw std::invalid_argument("make_limit: axis index out of range");
    return FarFieldLimit{kind, c, j, k};
}

namespace {

void check_unit(double s1, double s2) {
    if (std::fabs(s1 * s1 + s2 * s2 - 1.0) > 1e-8)
        throw std::invalid_argument("far-field direction must be a unit vector");
}

}  // namespace

double FarFieldLimit::eval(double s1, double s2) const {
    check_unit(s1, s2);
    const double twopi = 2.0 * M_PI;
    const double sj = j == 1 ? s1 : s2;
    const double sk = k == 1 ? s1 : s2;
    const double djk = j == k ? 1.0 : 0.0;
    if (kind == LimitKind::RieszInf) return (djk - 2.0 * sj * sk) / twopi;

    const double mc2 = 1.0 - c * c;
    const double q = mc2 + c * c * s1 * s1;
    switch (kind) {
        case LimitKind::LcInf:
            return c * c / (twopi * std::sqrt(mc2) * q) * (1.0 - 2.0 * s1 * s1 / q);
        case LimitKind::LcjInf: {
            const double dj1 = j == 1 ? 1.0 : 0.0;
            return std::sqrt(mc2) / (twopi * q) *
                   (dj1 * std::pow(mc2, -0.5 * (dj1 + 1.0)) -
                    2.0 * std::pow(mc2, -dj1) * s1 * sj / q);
        }
        case LimitKind::TcjkInf: {
            const double dj1 = j == 1 ? 1.0 : 0.0;
            const double dk1 = k == 1 ? 1.0 : 0.0;
            const double bracket = mc2 * (djk * std::pow(mc2, -0.5 * (dj1 + dk1 + 1.0)) / q -
                                          2.0 * std::pow(mc2, -dj1 - dk1 + 0.5) * sj * sk / (q * q)) -
                                   djk + 2.0 * sj * sk;
            return bracket / (twopi * c * c);
        }
        default:
            break;
    }
    return 0.0;
}

double lcj_sum_closed(double c, double s1) {
    const double q = 1.0 - c * c + c * c * s1 * s1;
    return -s1 / (2.0 * M_PI * std::sqrt(1.0 - c * c) * q);
}

double tcjk_sum_closed(double c, double s1, double s2, int k) {
    const double mc2 = 1.0 - c * c;
    const double q = mc2 + c * c * s1 * s1;
    const double sk = k == 1 ? s1 : s2;
    return -sk / (2.0 * M_PI * c * c) * (std::pow(mc2, k == 1 ? -0.5 : 0.5) / q - 1.0);
}

SumResiduals farfield_sum_check(double c, double s1, double s2) {
    check_unit(s1, s2);
    SumResiduals out;
    double lsum = 0.0;
    for (int j = 1; j <= 2; ++j) {
        const double sj = j == 1 ? s1 : s2;
        lsum += sj * make_limit(LimitKind::LcjInf, c, j).eval(s1, s2);
    }
    out.lsum = std::fabs(lsum - lcj_sum_closed(c, s1));
    for (int k = 1; k <= 2; ++k) {
        double tsum = 0.0;
        for (int j = 1; j <= 2; ++j) {
            const double sj = j == 1 ? s1 : s2;
            tsum += sj * make_limit(LimitKind::TcjkInf, c, j, k).eval(s1, s2);
        }
        out.tsum = std::max(out.tsum, std::fabs(tsum - tcjk_sum_closed(c, s1, s2, k)));
    }
    return out;
}

KernelField kernel_physical(SymbolKind kind, double c, const Grid& grid, int j, int k) {
    if (grid.dim != 2) throw std::invalid_argument("kernel_physical: 2d grids only");
    if (kind != SymbolKind::Rjk && !(c > 0.0 && c < 1.0))
        throw std::invalid_argument("kernel_physical: require c in (0,1)");
    const KernelSymbol sym = make_symbol(kind, 2, c, j, k);

    SpectralTransform tr(grid);
    std::vector<std::complex<double>> spec(grid.size(), 0.0);
    for (std::size_t idx = 1; idx < spec.size(); ++idx) {
        double xi1, xi2;
        tr.frequencies(idx, xi1, xi2);
        spec[idx] = sym.eval(xi1, xi2);
    }
    // (1/(Lx Ly)) sum_xi m(xi) e^{i xi x}: inverse transform rescaled, then
    // rotated so the kernel is centered at the coordinate origin.
    std::vector<double> raw = tr.inverse(spec);
    const double scale = static_cast<double>(grid.size()) / (grid.length[0] * grid.length[1]);
    ScalarSamples kernel = zeros(grid);
    const std::size_t nx = grid.n[0], ny = grid.n[1];
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix)
            kernel.values[grid.index(ix, iy)] =
                raw[((iy + ny / 2) % ny) * nx + (ix + nx / 2) % nx] * scale;

    const double half = 0.5 * std::min(grid.length[0], grid.length[1]);
    if (0.15 * half < 4.0 * std::max(grid.spacing[0], grid.spacing[1]))
        throw std::invalid_argument("kernel_physical: grid too coarse for the fit radii");
    const auto boundaries = log_spaced(0.15 * half, 0.4 * half, 9);
    std::vector<double> radii, maxima;
    annulus_max_profile(kernel, boundaries, radii, maxima);
    KernelField out{std::move(kernel), power_law_fit("kernel", radii, maxima)};
    return out;
}

std::vector<KernelFarFieldRow> kernel_farfield_table(SymbolKind kind, double c, const Grid& grid,
                                                     double radius, int ndir, int j, int k) {
    if (ndir < 1) throw std::invalid_argument("kernel_farfield_table: ndir >= 1");
    const double reliable = 0.4 * 0.5 * std::min(grid.length[0], grid.length[1]);
    if (radius > reliable)
        throw std::invalid_argument("kernel_farfield_table: radius outside reliable region");
    const KernelField kf = kernel_physical(kind, c, grid, j, k);
    LimitKind lk = LimitKind::LcInf;
    switch (kind) {
        case SymbolKind::Lc: lk = LimitKind::LcInf; break;
        case SymbolKind::Lcj: lk = LimitKind::LcjInf; break;
        case SymbolKind::Tcjk: lk = LimitKind::TcjkInf; break;
        case SymbolKind::Rjk: lk = LimitKind::RieszInf; break;
    }
    const FarFieldLimit limit = make_limit(lk, kind == SymbolKind::Rjk ? 0.5 : c, j, k);
    std::vector<KernelFarFieldRow> rows(ndir);
    for (int i = 0; i < ndir; ++i) {
        const double angle = 2.0 * M_PI * i / ndir;
        const double s1 = std::cos(angle), s2 = std::sin(angle);
        rows[i].angle = angle;
        rows[i].measured =
            radius * radius * interp_periodic(kf.kernel, radius * s1, radius * s2);
        rows[i].predicted = limit.eval(s1, s2);
    }
    return rows;
}

}  // namespace llfw
