#include "llfw/spectral.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace llfw {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution on private
// buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct SpectralTransform::Impl {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t size = 0;
};

SpectralTransform::SpectralTransform(const Grid& grid) : grid_(grid), impl_(new Impl) {
    const std::size_t ntot = grid.size();
    impl_->size = ntot;
    impl_->in = fftw_alloc_complex(ntot);
    impl_->out = fftw_alloc_complex(ntot);
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (grid.dim == 1) {
        impl_->fwd = fftw_plan_dft_1d(static_cast<int>(grid.n[0]), impl_->in, impl_->out,
                                      FFTW_FORWARD, FFTW_ESTIMATE);
        impl_->bwd = fftw_plan_dft_1d(static_cast<int>(grid.n[0]), impl_->in, impl_->out,
                                      FFTW_BACKWARD, FFTW_ESTIMATE);
    } else {
        // storage has ix fastest, so nx is FFTW's last (contiguous) dimension
        impl_->fwd = fftw_plan_dft_2d(static_cast<int>(grid.n[1]), static_cast<int>(grid.n[0]),
                                      impl_->in, impl_->out, FFTW_FORWARD, FFTW_ESTIMATE);
        impl_->bwd = fftw_plan_dft_2d(static_cast<int>(grid.n[1]), static_cast<int>(grid.n[0]),
                                      impl_->in, impl_->out, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
}

SpectralTransform::~SpectralTransform() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(impl_->fwd);
    fftw_destroy_plan(impl_->bwd);
    fftw_free(impl_->in);
    fftw_free(impl_->out);
}

std::vector<std::complex<double>> SpectralTransform::forward(const std::vector<double>& values) {
    if (values.size() != impl_->size) throw std::invalid_argument("forward: size mismatch");
    for (std::size_t i = 0; i < impl_->size; ++i) {
        impl_->in[i][0] = values[i];
        impl_->in[i][1] = 0.0;
    }
    fftw_execute(impl_->fwd);
    std::vector<std::complex<double>> spec(impl_->size);
    for (std::size_t i = 0; i < impl_->size; ++i) spec[i] = {impl_->out[i][0], impl_->out[i][1]};
    return spec;
}

std::vector<std::complex<double>> SpectralTransform::forward(
    const std::vector<std::complex<double>>& values) {
    if (values.size() != impl_->size) throw std::invalid_argument("forward: size mismatch");
    for (std::size_t i = 0; i < impl_->size; ++i) {
        impl_->in[i][0] = values[i].real();
        impl_->in[i][1] = values[i].imag();
    }
    fftw_execute(impl_->fwd);
    std::vector<std::complex<double>> spec(impl_->size);
    for (std::size_t i = 0; i < impl_->size; ++i) spec[i] = {impl_->out[i][0], impl_->out[i][1]};
    return spec;
}

std::vector<double> SpectralTransform::inverse(const std::vector<std::complex<double>>& spectrum) {
    if (spectrum.size() != impl_->size) throw std::invalid_argument("inverse: size mismatch");
    for (std::size_t i = 0; i < impl_->size; ++i) {
        impl_->in[i][0] = spectrum[i].real();
        impl_->in[i][1] = spectrum[i].imag();
    }
    fftw_execute(impl_->bwd);
    const double scale = 1.0 / static_cast<double>(impl_->size);
    std::vector<double> values(impl_->size);
    for (std::size_t i = 0; i < impl_->size; ++i) values[i] = impl_->out[i][0] * scale;
    return values;
}

std::vector<std::complex<double>> SpectralTransform::inverse_complex(
    const std::vector<std::complex<double>>& spectrum) {
    if (spectrum.size() != impl_->size) throw std::invalid_argument("inverse: size mismatch");
    for (std::size_t i = 0; i < impl_->size; ++i) {
        impl_->in[i][0] = spectrum[i].real();
        impl_->in[i][1] = spectrum[i].imag();
    }
    fftw_execute(impl_->bwd);
    const double scale = 1.0 / static_cast<double>(impl_->size);
    std::vector<std::complex<double>> values(impl_->size);
    for (std::size_t i = 0; i < impl_->size; ++i)
        values[i] = std::complex<double>(impl_->out[i][0], impl_->out[i][1]) * scale;
    return values;
}

void SpectralTransform::frequencies(std::size_t idx, double& xi1, double& xi2) const {
    const std::size_t kx = idx % grid_.n[0];
    xi1 = grid_.wavenumber(0, kx);
    xi2 = grid_.dim == 2 ? grid_.wavenumber(1, idx / grid_.n[0]) : 0.0;
}

bool SpectralTransform::is_nyquist(std::size_t idx) const {
    const std::size_t kx = idx % grid_.n[0];
    if (kx == grid_.n[0] / 2) return true;
    if (grid_.dim == 2 && idx / grid_.n[0] == grid_.n[1] / 2) return true;
    return false;
}

ScalarSamples spectral_gradient(const ScalarSamples& s, int axis) {
    if (axis < 0 || axis >= s.grid.dim) throw std::invalid_argument("spectral_gradient: bad axis");
    SpectralTransform tr(s.grid);
    auto spec = tr.forward(s.values);
    const std::size_t nx = s.grid.n[0];
    for (std::size_t idx = 0; idx < spec.size(); ++idx) {
        const std::size_t k = axis == 0 ? idx % nx : idx / nx;
        if (k == s.grid.n[axis] / 2) {
            spec[idx] = 0.0;
            continue;
        }
        spec[idx] *= std::complex<double>(0.0, s.grid.wavenumber(axis, k));
    }
    return ScalarSamples{s.grid, tr.inverse(spec)};
}

ScalarSamples apply_multiplier(const ScalarSamples& s, const Symbol& m) {
    SpectralTransform tr(s.grid);
    auto spec = tr.forward(s.values);
    spec[0] = 0.0;
    for (std::size_t idx = 1; idx < spec.size(); ++idx) {
        double xi1, xi2;
        tr.frequencies(idx, xi1, xi2);
        spec[idx] *= m(xi1, xi2);
    }
    return ScalarSamples{s.grid, tr.inverse(spec)};
}

ScalarSamples antigradient(const std::vector<ScalarSamples>& grad) {
    if (grad.empty()) throw std::invalid_argument("antigradient: no components");
    const Grid& g = grad[0].grid;
    if (static_cast<int>(grad.size()) != g.dim)
        throw std::invalid_argument("antigradient: component count != dim");
    SpectralTransform tr(g);
    std::vector<std::complex<double>> acc(g.size(), 0.0);
    for (int a = 0; a < g.dim; ++a) {
        auto spec = tr.forward(grad[a].values);
        const std::size_t nx = g.n[0];
        for (std::size_t idx = 0; idx < spec.size(); ++idx) {
            const std::size_t k = a == 0 ? idx % nx : idx / nx;
            acc[idx] += g.wavenumber(a, k) * spec[idx];
        }
    }
    for (std::size_t idx = 1; idx < acc.size(); ++idx) {
        if (tr.is_nyquist(idx)) {
            acc[idx] = 0.0;
            continue;
        }
        double xi1, xi2;
        tr.frequencies(idx, xi1, xi2);
        acc[idx] *= std::complex<double>(0.0, -1.0) / (xi1 * xi1 + xi2 * xi2);
    }
    acc[0] = 0.0;
    return ScalarSamples{g, tr.inverse(acc)};
}

ScalarSamples solve_poisson(const ScalarSamples& rhs) {
    SpectralTransform tr(rhs.grid);
    auto spec = tr.forward(rhs.values);
    spec[0] = 0.0;
    for (std::size_t idx = 1; idx < spec.size(); ++idx) {
        double xi1, xi2;
        tr.frequencies(idx, xi1, xi2);
        spec[idx] /= -(xi1 * xi1 + xi2 * xi2);
    }
    return ScalarSamples{rhs.grid, tr.inverse(spec)};
}

}  // namespace llfw
