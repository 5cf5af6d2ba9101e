#include "llfw/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace llfw {

namespace {

void check_axis(std::size_t n, double length) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid: n must be even and >= 8");
    if (!(length > 0.0)) throw std::invalid_argument("grid: length must be positive");
}

}  // namespace

double Grid::wavenumber(int axis, std::size_t k) const {
    const std::size_t na = n[axis];
    const double base = 2.0 * M_PI / length[axis];
    const auto kk = static_cast<long long>(k);
    const auto nn = static_cast<long long>(na);
    return base * static_cast<double>(kk < nn / 2 ? kk : kk - nn);
}

Grid make_grid(std::size_t n, double length) {
    check_axis(n, length);
    Grid g;
    g.dim = 1;
    g.n = {n, 1};
    g.length = {length, 0.0};
    g.spacing = {length / static_cast<double>(n), 0.0};
    return g;
}

Grid make_grid(std::size_t nx, std::size_t ny, double lx, double ly) {
    check_axis(nx, lx);
    check_axis(ny, ly);
    Grid g;
    g.dim = 2;
    g.n = {nx, ny};
    g.length = {lx, ly};
    g.spacing = {lx / static_cast<double>(nx), ly / static_cast<double>(ny)};
    return g;
}

ScalarSamples zeros(const Grid& grid) {
    return ScalarSamples{grid, std::vector<double>(grid.size(), 0.0)};
}

ScalarSamples sample(const Grid& grid, const std::function<double(double)>& f) {
    if (grid.dim != 1) throw std::invalid_argument("sample: 1d function on non-1d grid");
    ScalarSamples s = zeros(grid);
    for (std::size_t i = 0; i < grid.n[0]; ++i) s.values[i] = f(grid.coord(0, i));
    return s;
}

ScalarSamples sample(const Grid& grid, const std::function<double(double, double)>& f) {
    if (grid.dim != 2) throw std::invalid_argument("sample: 2d function on non-2d grid");
    ScalarSamples s = zeros(grid);
    for (std::size_t iy = 0; iy < grid.n[1]; ++iy) {
        const double y = grid.coord(1, iy);
        for (std::size_t ix = 0; ix < grid.n[0]; ++ix)
            s.values[grid.index(ix, iy)] = f(grid.coord(0, ix), y);
    }
    return s;
}

double integrate(const ScalarSamples& s) {
    double acc = 0.0;
    for (double v : s.values) acc += v;
    double cell = s.grid.spacing[0];
    if (s.grid.dim == 2) cell *= s.grid.spacing[1];
    return acc * cell;
}

double max_abs(const ScalarSamples& s) {
    double m = 0.0;
    for (double v : s.values) m = std::max(m, std::fabs(v));
    return m;
}

double l2_norm(const ScalarSamples& s) {
    double acc = 0.0;
    for (double v : s.values) acc += v * v;
    double cell = s.grid.spacing[0];
    if (s.grid.dim == 2) cell *= s.grid.spacing[1];
    return std::sqrt(acc * cell);
}

double lp_norm(const ScalarSamples& s, double p) {
    double acc = 0.0;
    for (double v : s.values) acc += std::pow(std::fabs(v), p);
    double cell = s.grid.spacing[0];
    if (s.grid.dim == 2) cell *= s.grid.spacing[1];
    return std::pow(acc * cell, 1.0 / p);
}

double interp_periodic(const ScalarSamples& s, double x, double y) {
    const Grid& g = s.grid;
    auto locate = [](double pos, double lo, double h, std::size_t n) {
        double t = (pos - lo) / h;
        double fl = std::floor(t);
        auto i = static_cast<long long>(fl);
        const auto nn = static_cast<long long>(n);
        i %= nn;
        if (i < 0) i += nn;
        return std::pair<std::size_t, double>{static_cast<std::size_t>(i), t - fl};
    };
    const auto [ix, fx] = locate(x, -0.5 * g.length[0], g.spacing[0], g.n[0]);
    const std::size_t ix1 = (ix + 1) % g.n[0];
    if (g.dim == 1) {
        return (1.0 - fx) * s.values[ix] + fx * s.values[ix1];
    }
    const auto [iy, fy] = locate(y, -0.5 * g.length[1], g.spacing[1], g.n[1]);
    const std::size_t iy1 = (iy + 1) % g.n[1];
    return (1.0 - fx) * (1.0 - fy) * s.values[g.index(ix, iy)] +
           fx * (1.0 - fy) * s.values[g.index(ix1, iy)] +
           (1.0 - fx) * fy * s.values[g.index(ix, iy1)] +
           fx * fy * s.values[g.index(ix1, iy1)];
}

}  // namespace llfw
