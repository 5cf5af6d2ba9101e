#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace llfw {

/// Uniform periodic sampling lattice in one or two dimensions.
///
/// Nodes along axis a sit at x_i = -length[a]/2 + i*spacing[a] for
/// i = 0..n[a]-1, so the box is [-L/2, L/2) per axis.  Wavenumbers follow
/// the standard DFT ordering: index k maps to 2*pi*k~/L with k~ = k for
/// k < n/2 and k~ = k - n otherwise.
struct Grid {
    int dim = 0;
    std::array<std::size_t, 2> n{1, 1};
    std::array<double, 2> length{0.0, 0.0};
    std::array<double, 2> spacing{0.0, 0.0};

    std::size_t size() const { return n[0] * n[1]; }

    // storage is row-major with the first axis fastest: index = iy*nx + ix
    std::size_t index(std::size_t ix, std::size_t iy = 0) const { return iy * n[0] + ix; }

    double coord(int axis, std::size_t i) const {
        return -0.5 * length[axis] + spacing[axis] * static_cast<double>(i);
    }

    double wavenumber(int axis, std::size_t k) const;

    bool same_layout(const Grid& other) const {
        return dim == other.dim && n == other.n && length == other.length;
    }
};

Grid make_grid(std::size_t n, double length);
Grid make_grid(std::size_t nx, std::size_t ny, double lx, double ly);

/// Real samples on a Grid, one value per node.
struct ScalarSamples {
    Grid grid;
    std::vector<double> values;

    double& at(std::size_t ix, std::size_t iy = 0) { return values[grid.index(ix, iy)]; }
    double at(std::size_t ix, std::size_t iy = 0) const { return values[grid.index(ix, iy)]; }
};

ScalarSamples zeros(const Grid& grid);
ScalarSamples sample(const Grid& grid, const std::function<double(double)>& f);
ScalarSamples sample(const Grid& grid, const std::function<double(double, double)>& f);

/// Rectangle-rule integral, spectrally accurate for smooth periodic data.
double integrate(const ScalarSamples& s);

double max_abs(const ScalarSamples& s);
double l2_norm(const ScalarSamples& s);  // (integral of s^2)^(1/2)
double lp_norm(const ScalarSamples& s, double p);

/// Bilinear interpolation with periodic wrap; coordinates in box units.
double interp_periodic(const ScalarSamples& s, double x, double y = 0.0);

}  // namespace llfw
