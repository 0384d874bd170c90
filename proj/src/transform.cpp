#include "morsekit/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "morsekit/fft.hpp"
#include "morsekit/threading.hpp"

namespace morsekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void validate_grid(const ScaleGrid& grid) {
    if (grid.scales.empty()) throw std::invalid_argument("cwt: empty scale grid");
    double prev = 0.0;
    for (double s : grid.scales) {
        if (!(s > prev)) throw std::invalid_argument("cwt: scales must be positive ascending");
        prev = s;
    }
}

Scalogram cwt_engine(const std::vector<std::complex<double>>& x, double dt,
                     const AnalyticWavelet& w, const ScaleGrid& grid, BoundaryPolicy boundary,
                     bool parallel) {
    if (x.size() < 16) throw std::invalid_argument("cwt: signal must have at least 16 samples");
    if (!(dt > 0.0)) throw std::invalid_argument("cwt: dt must be positive");
    validate_grid(grid);
    const double nyquist = kPi / dt;
    if (grid.scales.front() * nyquist < w.peak_frequency())
        throw std::domain_error(
            "cwt: scale out of band, need s * omega_Nyquist >= peak frequency " +
            std::to_string(w.peak_frequency()));

    const std::size_t n = x.size();
    std::vector<std::complex<double>> ext;
    std::size_t offset = 0;
    switch (boundary) {
        case BoundaryPolicy::periodic:
            ext = x;
            break;
        case BoundaryPolicy::zero:
            ext.assign(3 * n, 0.0);
            std::copy(x.begin(), x.end(), ext.begin() + static_cast<std::ptrdiff_t>(n));
            offset = n;
            break;
        case BoundaryPolicy::mirror:
            ext.reserve(3 * n);
            ext.assign(x.rbegin(), x.rend());
            ext.insert(ext.end(), x.begin(), x.end());
            ext.insert(ext.end(), x.rbegin(), x.rend());
            offset = n;
            break;
    }

    const std::size_t m = ext.size();
    const std::vector<std::complex<double>> spec = fft_forward(ext);
    const std::vector<double> omega = fft_frequencies(m, dt);

    Scalogram sg;
    sg.convention = grid.convention;
    sg.boundary = boundary;
    sg.scales = grid.scales;
    sg.times.resize(n);
    for (std::size_t j = 0; j < n; ++j) sg.times[j] = static_cast<double>(j) * dt;
    sg.coefficients.resize(grid.scales.size() * n);

    const std::ptrdiff_t n_scales = static_cast<std::ptrdiff_t>(grid.scales.size());
    const int threads = parallel ? worker_count() : 1;
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::ptrdiff_t k = 0; k < n_scales; ++k) {
        const double s = grid.scales[static_cast<std::size_t>(k)];
        std::vector<std::complex<double>> prod(m);
        for (std::size_t i = 0; i < m; ++i) prod[i] = w.spectrum(s * omega[i]) * spec[i];
        std::vector<std::complex<double>> row(m);
        dft(prod.data(), row.data(), m, 1);
        const double inv = 1.0 / static_cast<double>(m);
        std::complex<double>* dst = sg.coefficients.data() + k * static_cast<std::ptrdiff_t>(n);
        for (std::size_t j = 0; j < n; ++j) dst[j] = row[offset + j] * inv;
    }
    return sg;
}

}  // namespace

ScaleGrid make_scale_grid(const AnalyticWavelet& w, FrequencyConvention conv, double omega_lo,
                          double omega_hi, double voices) {
    if (!(omega_lo > 0.0) || !(omega_hi > omega_lo))
        throw std::invalid_argument("make_scale_grid: need 0 < omega_lo < omega_hi");
    if (!(voices >= 1.0)) throw std::invalid_argument("make_scale_grid: voices must be >= 1");
    ScaleGrid grid;
    grid.voices = voices;
    grid.convention = conv;
    const double f = w.frequency_for(conv);
    const double s_min = f / omega_hi;
    const std::size_t count =
        static_cast<std::size_t>(std::ceil(voices * std::log2(omega_hi / omega_lo))) + 1;
    grid.scales.resize(count);
    for (std::size_t k = 0; k < count; ++k)
        grid.scales[k] = s_min * std::exp2(static_cast<double>(k) / voices);
    return grid;
}

double scale_to_frequency(const AnalyticWavelet& w, FrequencyConvention conv, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("scale_to_frequency: scale must be positive");
    return w.frequency_for(conv) / s;
}

double frequency_to_scale(const AnalyticWavelet& w, FrequencyConvention conv, double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("frequency_to_scale: frequency must be positive");
    return w.frequency_for(conv) / omega;
}

Scalogram cwt(const std::vector<std::complex<double>>& x, double dt, const AnalyticWavelet& w,
              const ScaleGrid& grid, BoundaryPolicy boundary) {
    return cwt_engine(x, dt, w, grid, boundary, true);
}

Scalogram cwt(const std::vector<double>& x, double dt, const AnalyticWavelet& w,
              const ScaleGrid& grid, BoundaryPolicy boundary) {
    std::vector<std::complex<double>> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i];
    return cwt_engine(z, dt, w, grid, boundary, true);
}

Scalogram cwt_serial(const std::vector<std::complex<double>>& x, double dt,
                     const AnalyticWavelet& w, const ScaleGrid& grid, BoundaryPolicy boundary) {
    return cwt_engine(x, dt, w, grid, boundary, false);
}

EnergyMeanScale energy_mean_scale(const Scalogram& sg, std::size_t time_idx) {
    const std::size_t ns = sg.scales.size();
    if (ns == 0 || time_idx >= sg.times.size())
        throw std::invalid_argument("energy_mean_scale: index out of range");
    std::vector<double> e(ns);
    double e_max = 0.0;
    for (std::size_t k = 0; k < ns; ++k) {
        e[k] = std::norm(sg.at(k, time_idx));
        e_max = std::max(e_max, e[k]);
    }
    if (e_max <= 0.0) throw std::domain_error("energy_mean_scale: zero energy at time slice");
    EnergyMeanScale out;
    if (ns == 1) {
        out.scale = sg.scales[0];
        return out;
    }
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < ns; ++k) {
        const double left = (k == 0) ? sg.scales[0] : sg.scales[k - 1];
        const double right = (k == ns - 1) ? sg.scales[ns - 1] : sg.scales[k + 1];
        const double weight = 0.5 * (right - left);
        num += weight * sg.scales[k] * e[k];
        den += weight * e[k];
    }
    out.scale = num / den;
    out.truncated = e.front() > 1e-3 * e_max || e.back() > 1e-3 * e_max;
    return out;
}

std::vector<std::complex<double>> predict_ridge_response(const ModulatedSignal& sig,
                                                         const AnalyticWavelet& w) {
    const std::size_t n = sig.t.size();
    if (n < 7 || sig.amplitude.size() != n || sig.phase.size() != n)
        throw std::invalid_argument("predict_ridge_response: need >= 7 consistent samples");
    const double h = sig.t[1] - sig.t[0];
    if (!(h > 0.0)) throw std::invalid_argument("predict_ridge_response: grid must ascend");
    for (std::size_t i = 1; i < n; ++i)
        if (std::fabs(sig.t[i] - sig.t[i - 1] - h) > 1e-8 * h)
            throw std::invalid_argument("predict_ridge_response: grid must be uniform");
    for (double a : sig.amplitude)
        if (!(a > 0.0))
            throw std::invalid_argument("predict_ridge_response: amplitude must be positive");

    const auto& a = sig.amplitude;
    const auto& ph = sig.phase;
    auto d1 = [h](const std::vector<double>& f, std::size_t j) {
        return (f[j + 1] - f[j - 1]) / (2.0 * h);
    };
    auto d2 = [h](const std::vector<double>& f, std::size_t j) {
        return (f[j + 1] - 2.0 * f[j] + f[j - 1]) / (h * h);
    };
    auto d3 = [h](const std::vector<double>& f, std::size_t j) {
        return (f[j + 2] - 2.0 * f[j + 1] + 2.0 * f[j - 1] - f[j - 2]) / (2.0 * h * h * h);
    };

    const double psi2 = w.peak_derivative(2);
    const double psi3 = w.peak_derivative(3);
    std::vector<std::complex<double>> out(n);
    // Interior stencil indices; edges reuse the nearest interior correction.
    const std::size_t first = 2, last = n - 3;
    std::vector<std::complex<double>> factor(n);
    for (std::size_t j = first; j <= last; ++j) {
        const double omega = d1(ph, j);
        if (!(omega > 0.0))
            throw std::domain_error("predict_ridge_response: nonpositive instantaneous frequency");
        const double omega1 = d2(ph, j);
        const double omega2 = d3(ph, j);
        const std::complex<double> second(d2(a, j) / a[j], omega1);
        const std::complex<double> third =
            std::complex<double>(d3(a, j) / a[j], 0.0) +
            std::complex<double>(0.0, 3.0 * (d1(a, j) / a[j]) * omega1) +
            std::complex<double>(0.0, omega2);
        // Spectra here are real, so the conjugated derivatives equal themselves.
        factor[j] = 1.0 - 0.5 * second * psi2 / (omega * omega) +
                    std::complex<double>(0.0, 1.0 / 6.0) * third * psi3 / (omega * omega * omega);
    }
    for (std::size_t j = 0; j < first; ++j) factor[j] = factor[first];
    for (std::size_t j = last + 1; j < n; ++j) factor[j] = factor[last];
    for (std::size_t j = 0; j < n; ++j)
        out[j] = a[j] * std::complex<double>(std::cos(ph[j]), std::sin(ph[j])) * factor[j];
    return out;
}

ChirpSignal make_chirp(double duration, double rate, double envelope_width, std::size_t n) {
    if (!(duration > 0.0)) throw std::invalid_argument("make_chirp: duration must be positive");
    if (!(rate > 0.0)) throw std::invalid_argument("make_chirp: rate must be positive");
    if (!(envelope_width > 0.0))
        throw std::invalid_argument("make_chirp: envelope width must be positive");
    if (n < 9 || n % 2 == 0)
        throw std::invalid_argument("make_chirp: odd sample count of at least 9 required");
    ChirpSignal out;
    out.t.resize(n);
    out.x.resize(n);
    out.descriptor.t.resize(n);
    out.descriptor.amplitude.resize(n);
    out.descriptor.phase.resize(n);
    const double dt = duration / static_cast<double>(n - 1);
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const double t = static_cast<double>(i - half) * dt;
        const double env = std::exp(-0.5 * t * t / (envelope_width * envelope_width));
        const double phase = 0.5 * rate * t * t;
        const std::size_t u = static_cast<std::size_t>(i);
        out.t[u] = t;
        out.x[u] = env * std::cos(phase);
        out.descriptor.t[u] = t;
        out.descriptor.amplitude[u] = env;
        out.descriptor.phase[u] = phase;
    }
    return out;
}

double interference_metric(const Scalogram& sg) {
    const std::size_t nt = sg.times.size();
    if (nt < 8) throw std::domain_error("interference_metric: need at least 8 time steps");
    std::vector<double> curve(nt);
    for (std::size_t j = 0; j < nt; ++j) {
        double best = 0.0;
        for (std::size_t k = 0; k < sg.scales.size(); ++k)
            best = std::max(best, std::abs(sg.at(k, j)));
        curve[j] = best;
    }
    double mean = 0.0;
    for (double v : curve) mean += v;
    mean /= static_cast<double>(nt);
    if (!(mean > 0.0)) throw std::domain_error("interference_metric: zero scalogram");
    std::vector<double> dd(nt - 2);
    double dd_mean = 0.0;
    for (std::size_t j = 1; j + 1 < nt; ++j) {
        dd[j - 1] = curve[j + 1] - 2.0 * curve[j] + curve[j - 1];
        dd_mean += dd[j - 1];
    }
    dd_mean /= static_cast<double>(dd.size());
    double var = 0.0;
    for (double v : dd) var += (v - dd_mean) * (v - dd_mean);
    var /= static_cast<double>(dd.size());
    return std::sqrt(var) / mean;
}

}  // namespace morsekit
