#include "morsekit/timefreq.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "morsekit/fft.hpp"
#include "morsekit/threading.hpp"

namespace morsekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double grid_step(const SampledWavelet& w, const char* who) {
    if (w.t.size() < 3 || w.t.size() % 2 == 0 || w.values.size() != w.t.size())
        throw std::invalid_argument(std::string(who) + ": odd-length sampled wavelet required");
    const double dt = w.t[1] - w.t[0];
    if (!(dt > 0.0)) throw std::invalid_argument(std::string(who) + ": grid must ascend");
    for (std::size_t i = 1; i < w.t.size(); ++i)
        if (std::fabs(w.t[i] - w.t[i - 1] - dt) > 1e-8 * dt)
            throw std::invalid_argument(std::string(who) + ": grid must be uniform");
    return dt;
}

// Oversample an odd-length sample set by integer q through spectral
// zero-padding; values at the original sample positions are preserved.
std::vector<std::complex<double>> upsample(const std::vector<std::complex<double>>& x, int q) {
    const std::size_t n = x.size();
    const std::size_t half = (n - 1) / 2;
    const std::size_t m = n * static_cast<std::size_t>(q);
    std::vector<std::complex<double>> spec = fft_forward(x);
    std::vector<std::complex<double>> padded(m, 0.0);
    for (std::size_t k = 0; k <= half; ++k) padded[k] = spec[k];
    for (std::size_t k = half + 1; k < n; ++k) padded[k + m - n] = spec[k];
    std::vector<std::complex<double>> up = fft_inverse(padded);
    for (auto& v : up) v *= static_cast<double>(q);
    return up;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

WignerVille wigner_engine(const SampledWavelet& w, int oversample, bool parallel) {
    const double dt = grid_step(w, "wigner_ville");
    if (oversample < 2) throw std::invalid_argument("wigner_ville: oversample must be >= 2");
    const std::size_t n = w.t.size();

    double peak = 0.0;
    for (const auto& v : w.values) peak = std::max(peak, std::abs(v));
    if (!(peak > 0.0)) throw std::invalid_argument("wigner_ville: zero wavelet");
    const double edge = std::max(std::abs(w.values.front()), std::abs(w.values.back()));

    const std::vector<std::complex<double>> up = upsample(w.values, oversample);
    const std::size_t m = up.size();
    const double dtau = 2.0 * dt / static_cast<double>(oversample);  // lag step
    const std::size_t n_lag = next_pow2(2 * m);

    WignerVille out;
    out.aliasing_warning = edge > 1e-6 * peak;
    out.times = w.t;
    out.frequencies.resize(n_lag);
    const double dw = 2.0 * kPi / (static_cast<double>(n_lag) * dtau);
    const std::ptrdiff_t half_lag = static_cast<std::ptrdiff_t>(n_lag / 2);
    for (std::size_t l = 0; l < n_lag; ++l)
        out.frequencies[l] =
            dw * static_cast<double>(static_cast<std::ptrdiff_t>(l) - half_lag);
    out.values.resize(n * n_lag);

    double residual = 0.0;
    const int threads = parallel ? worker_count() : 1;
#pragma omp parallel for num_threads(threads) schedule(static) reduction(max : residual)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
        const std::ptrdiff_t center = j * oversample;
        std::vector<std::complex<double>> lags(n_lag, 0.0);
        const std::ptrdiff_t reach =
            std::min(center, static_cast<std::ptrdiff_t>(m) - 1 - center);
        for (std::ptrdiff_t r = 0; r <= reach; ++r) {
            const std::complex<double> z =
                up[static_cast<std::size_t>(center + r)] *
                std::conj(up[static_cast<std::size_t>(center - r)]);
            lags[static_cast<std::size_t>(r)] = z;
            if (r > 0) lags[n_lag - static_cast<std::size_t>(r)] = std::conj(z);
        }
        std::vector<std::complex<double>> spec(n_lag);
        dft(lags.data(), spec.data(), n_lag, -1);
        double* row = out.values.data() + j * static_cast<std::ptrdiff_t>(n_lag);
        for (std::size_t l = 0; l < n_lag; ++l) {
            // fftshift: output frequency index l maps to FFT bin l - half_lag.
            const std::size_t bin =
                static_cast<std::size_t>((static_cast<std::ptrdiff_t>(l) - half_lag +
                                          static_cast<std::ptrdiff_t>(n_lag)) %
                                         static_cast<std::ptrdiff_t>(n_lag));
            row[l] = spec[bin].real() * dtau;
            residual = std::max(residual, std::fabs(spec[bin].imag()) * dtau);
        }
    }
    out.imag_residual = residual;
    return out;
}

}  // namespace

WignerVille wigner_ville(const SampledWavelet& w, int oversample) {
    return wigner_engine(w, oversample, true);
}

WignerVille wigner_ville_serial(const SampledWavelet& w, int oversample) {
    return wigner_engine(w, oversample, false);
}

InstantaneousFrequency instantaneous_frequency(const SampledWavelet& w) {
    const double dt = grid_step(w, "instantaneous_frequency");
    const std::size_t n = w.t.size();
    std::vector<std::complex<double>> spec = fft_forward(w.values);
    const std::vector<double> omega = fft_frequencies(n, dt);
    for (std::size_t k = 0; k < n; ++k) spec[k] *= std::complex<double>(0.0, omega[k]);
    const std::vector<std::complex<double>> deriv = fft_inverse(spec);

    double peak = 0.0;
    for (const auto& v : w.values) peak = std::max(peak, std::abs(v));
    const double floor = 1e-8 * peak;

    InstantaneousFrequency out;
    out.t = w.t;
    out.omega.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        out.omega[j] = std::abs(w.values[j]) > floor
                           ? (deriv[j] / w.values[j]).imag()
                           : std::numeric_limits<double>::quiet_NaN();
    return out;
}

}  // namespace morsekit
