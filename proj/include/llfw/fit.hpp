#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "llfw/grid.hpp"

namespace llfw {

/// Result of a log-log power-law fit of an annulus profile.
/// `exponent` is the signed least-squares slope (negative for decay);
/// `power_law` is cleared when the local slope steepens monotonically with
/// radius (exponential-type decay).
struct DecayFit {
    std::string quantity;
    double exponent = 0.0;
    double fit_residual = 0.0;
    std::vector<double> radii;
    bool power_law = true;
};

/// Max of |values| over log-spaced annuli with boundaries b[i] <= r < b[i+1];
/// returns the geometric-mean radius and the per-annulus maximum.
inline void annulus_max_profile(const ScalarSamples& s, const std::vector<double>& boundaries,
                                std::vector<double>& radii, std::vector<double>& maxima) {
    const Grid& g = s.grid;
    if (g.dim != 2) throw std::invalid_argument("annulus_max_profile: 2d grids only");
    const std::size_t nb = boundaries.size();
    if (nb < 2) throw std::invalid_argument("annulus_max_profile: need >= 2 boundaries");
    radii.assign(nb - 1, 0.0);
    maxima.assign(nb - 1, 0.0);
    for (std::size_t i = 0; i + 1 < nb; ++i)
        radii[i] = std::sqrt(boundaries[i] * boundaries[i + 1]);
    for (std::size_t iy = 0; iy < g.n[1]; ++iy) {
        const double y = g.coord(1, iy);
        for (std::size_t ix = 0; ix < g.n[0]; ++ix) {
            const double x = g.coord(0, ix);
            const double r = std::hypot(x, y);
            if (r < boundaries.front() || r >= boundaries.back()) continue;
            std::size_t band = 0;
            while (band + 2 < nb && r >= boundaries[band + 1]) ++band;
            maxima[band] = std::max(maxima[band], std::fabs(s.values[g.index(ix, iy)]));
        }
    }
}

inline std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
    return v;
}

/// Least-squares slope of log(values) against log(radii).  Throws when any
/// value vanishes (no decay signal to fit).
inline DecayFit power_law_fit(const std::string& quantity, const std::vector<double>& radii,
                              const std::vector<double>& values) {
    const std::size_t m = radii.size();
    if (m < 3 || values.size() != m) throw std::invalid_argument("power_law_fit: need >= 3 annuli");
    std::vector<double> lx(m), ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(values[i] > 0.0))
            throw std::runtime_error("power_law_fit: zero annulus signal for " + quantity);
        lx[i] = std::log(radii[i]);
        ly[i] = std::log(values[i]);
    }
    auto slope_of = [&](std::size_t lo, std::size_t hi) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double cnt = static_cast<double>(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    };
    DecayFit fit;
    fit.quantity = quantity;
    fit.radii = radii;
    fit.exponent = slope_of(0, m);
    const double sy = [&] {
        double s = 0;
        for (double v : ly) s += v;
        return s / static_cast<double>(m);
    }();
    const double sx = [&] {
        double s = 0;
        for (double v : lx) s += v;
        return s / static_cast<double>(m);
    }();
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double pred = sy + fit.exponent * (lx[i] - sx);
        ss += (ly[i] - pred) * (ly[i] - pred);
    }
    fit.fit_residual = std::sqrt(ss / static_cast<double>(m));
    // steepening local slope means the profile is not a power law
    const double inner = slope_of(0, m / 2 + 1);
    const double outer = slope_of(m / 2, m);
    fit.power_law = outer > inner - 0.5;
    return fit;
}

}  // namespace llfw
