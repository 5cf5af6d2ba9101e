#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "llfw/grid.hpp"

namespace llfw {

/// Real Fourier multiplier m(xi); 1d grids pass xi2 = 0.
using Symbol = std::function<double(double, double)>;

/// FFTW-backed complex transform bound to one grid layout.  Forward is the
/// unnormalized DFT sum over nodes; inverse divides by the node count.  A
/// transform owns its buffers, so distinct instances are safe to use from
/// distinct threads (plan creation itself is serialized internally).
class SpectralTransform {
public:
    explicit SpectralTransform(const Grid& grid);
    ~SpectralTransform();
    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    const Grid& grid() const { return grid_; }

    std::vector<std::complex<double>> forward(const std::vector<double>& values);
    std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& values);
    /// Inverse transform, real part of.
    std::vector<double> inverse(const std::vector<std::complex<double>>& spectrum);
    std::vector<std::complex<double>> inverse_complex(const std::vector<std::complex<double>>& spectrum);

    /// Wavenumber of the combined storage index (kx fastest).
    void frequencies(std::size_t idx, double& xi1, double& xi2) const;
    bool is_nyquist(std::size_t idx) const;

private:
    Grid grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// d/dx_axis by multiplication with i*xi_axis; Nyquist modes zeroed.
ScalarSamples spectral_gradient(const ScalarSamples& s, int axis);

/// Inverse transform of m(xi)*s_hat(xi); the zero mode of the product is set
/// to 0 (discrete gauge for symbols that are direction-dependent at the
/// origin).
ScalarSamples apply_multiplier(const ScalarSamples& s, const Symbol& m);

/// Mean-zero potential whose spectral gradient matches the given components.
ScalarSamples antigradient(const std::vector<ScalarSamples>& grad);

/// Mean-zero solution of laplace(phi) = rhs (zero mode of rhs discarded).
ScalarSamples solve_poisson(const ScalarSamples& rhs);

}  // namespace llfw
