#include "morsekit/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "morsekit/fft.hpp"
#include "morsekit/special_functions.hpp"

namespace morsekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

void validate_time_grid(const std::vector<double>& t, const char* who) {
    if (t.size() < 3 || t.size() % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": odd sample count of at least 3 required");
    const double dt = t[1] - t[0];
    if (!(dt > 0.0)) throw std::invalid_argument(std::string(who) + ": grid must be increasing");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (std::fabs(t[i] - t[i - 1] - dt) > 1e-8 * dt)
            throw std::invalid_argument(std::string(who) + ": grid must be uniform");
    if (std::fabs(t[t.size() / 2]) > 1e-8 * dt)
        throw std::invalid_argument(std::string(who) + ": grid must be centered at 0");
}

void finish(SampledWavelet& w) {
    double peak = 0.0;
    for (const auto& v : w.values) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(w.values.front()), std::abs(w.values.back()));
    w.aliasing_warning = edge > 1e-6 * peak;
}

}  // namespace

std::vector<double> symmetric_time_grid(std::size_t n, double dt) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("symmetric_time_grid: odd count of at least 3 required");
    if (!(dt > 0.0)) throw std::invalid_argument("symmetric_time_grid: dt must be positive");
    std::vector<double> t(n);
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        t[static_cast<std::size_t>(i)] = static_cast<double>(i - half) * dt;
    return t;
}

SampledWavelet cauchy_time(double beta, const std::vector<double>& t) {
    if (!(beta >= 0.0)) throw std::domain_error("cauchy_time: beta must be nonnegative");
    validate_time_grid(t, "cauchy_time");
    // (e/beta)^beta Gamma(beta+1) / pi, composed in log space.
    const double log_coeff =
        (beta > 0.0 ? beta * (1.0 - std::log(beta)) : 0.0) + log_gamma(beta + 1.0) - std::log(kPi);
    const double coeff = std::exp(log_coeff);
    SampledWavelet out;
    out.t = t;
    out.source = "cauchy-closed-form";
    out.values.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        out.values[i] = coeff * std::pow(std::complex<double>(1.0, -t[i]), -(beta + 1.0));
    finish(out);
    return out;
}

SampledWavelet gaussian_family_time(int beta, const std::vector<double>& t) {
    if (beta < 0 || beta > 30)
        throw std::domain_error("gaussian_family_time: integer beta in [0, 30] required");
    validate_time_grid(t, "gaussian_family_time");
    // a_{beta,2}/(4 sqrt(pi)) with a = 2 (2e/beta)^(beta/2); a(0) = 2.
    const double b = static_cast<double>(beta);
    const double log_a =
        std::log(2.0) + (beta > 0 ? 0.5 * b * (1.0 + std::log(2.0) - std::log(b)) : 0.0);
    const double coeff = std::exp(log_a) / (4.0 * kSqrtPi);
    const std::complex<double> phase = std::pow(std::complex<double>(0.0, 0.5), beta);
    const double parity = (beta % 2 == 0) ? 1.0 : -1.0;
    SampledWavelet out;
    out.t = t;
    out.source = "gaussian-closed-form";
    out.values.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = 0.5 * t[i];
        const double re = hermite(beta, x) * std::exp(-x * x);
        const double im = parity * (2.0 / kSqrtPi) * dawson_derivative(beta, x);
        out.values[i] = coeff * phase * std::complex<double>(re, im);
    }
    finish(out);
    return out;
}

SampledWavelet airy_time(int beta, const std::vector<double>& t) {
    if (beta < 0 || beta > 10)
        throw std::domain_error("airy_time: integer beta in [0, 10] required");
    validate_time_grid(t, "airy_time");
    // a_{beta,3}/2 * 3^{-(beta+1)/3} with a = 2 (3e/beta)^(beta/3); a(0) = 2.
    const double b = static_cast<double>(beta);
    const double log_half_a =
        beta > 0 ? (b / 3.0) * (1.0 + std::log(3.0) - std::log(b)) : 0.0;
    const double coeff = std::exp(log_half_a - (b + 1.0) / 3.0 * std::log(3.0));
    const double arg_scale = std::pow(3.0, -1.0 / 3.0);
    SampledWavelet out;
    out.t = t;
    out.source = "airy-closed-form";
    out.values.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto h = scorer_hi_imag_derivatives(t[i] * arg_scale, beta);
        out.values[i] = coeff * h[static_cast<std::size_t>(beta)];
    }
    finish(out);
    return out;
}

std::vector<std::complex<double>> analytic_filter_apply(const std::vector<double>& x) {
    if (x.size() < 2) throw std::invalid_argument("analytic_filter_apply: too few samples");
    const std::size_t n = x.size();
    std::vector<std::complex<double>> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = x[i];
    std::vector<std::complex<double>> spec = fft_forward(in);
    // Positive bins doubled, negatives zeroed; DC (and Nyquist when present)
    // keep weight 1 so constants and real inputs round-trip.
    const std::size_t last_pos = (n % 2 == 0) ? n / 2 - 1 : n / 2;
    for (std::size_t k = 1; k <= last_pos; ++k) spec[k] *= 2.0;
    for (std::size_t k = n / 2 + 1; k < n; ++k) spec[k] = 0.0;
    return fft_inverse(spec);
}

std::vector<std::complex<double>> analytic_filter_apply(
    const std::vector<std::complex<double>>& x) {
    std::vector<double> re(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) re[i] = x[i].real();
    return analytic_filter_apply(re);
}

SampledWavelet spectral_inverse(const SpectralWavelet& w, std::size_t n_time) {
    const std::size_t m = w.omega.size();
    if (m < 3 || w.values.size() != m)
        throw std::invalid_argument("spectral_inverse: malformed spectrum");
    if (w.omega[0] != 0.0)
        throw std::invalid_argument("spectral_inverse: grid must start at omega = 0");
    const double dw = w.omega[1] - w.omega[0];
    if (!(dw > 0.0)) throw std::invalid_argument("spectral_inverse: grid must ascend from 0");

    const bool two_sided = w.omega.back() < 0.0;
    std::size_t n;  // full FFT length
    std::vector<std::complex<double>> bins;
    if (two_sided) {
        n = m;
        if (n % 2 == 0)
            throw std::invalid_argument("spectral_inverse: two-sided grid must have odd length");
        const std::size_t half = (n - 1) / 2;
        for (std::size_t k = 0; k < n; ++k) {
            const double expect = (k <= half) ? static_cast<double>(k) * dw
                                              : (static_cast<double>(k) - static_cast<double>(n)) * dw;
            if (std::fabs(w.omega[k] - expect) > 1e-8 * dw)
                throw std::invalid_argument("spectral_inverse: grid must be FFT-ordered");
        }
        bins.assign(w.values.begin(), w.values.end());
    } else {
        for (std::size_t k = 1; k < m; ++k)
            if (std::fabs(w.omega[k] - static_cast<double>(k) * dw) > 1e-8 * dw)
                throw std::invalid_argument("spectral_inverse: grid must be uniform");
        n = 2 * m - 1;
        bins.assign(n, 0.0);
        for (std::size_t k = 0; k < m; ++k) bins[k] = w.values[k];
    }

    const double dt = 2.0 * kPi / (static_cast<double>(n) * dw);
    std::vector<std::complex<double>> psi = fft_inverse(bins);

    const std::size_t half = (n - 1) / 2;
    SampledWavelet out;
    out.source = "spectral-inverse";
    out.t = symmetric_time_grid(n, dt);
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = psi[(i + half + 1) % n] / dt;

    if (n_time != 0) {
        if (n_time % 2 == 0 || n_time > n)
            throw std::invalid_argument("spectral_inverse: n_time must be odd and at most 2M-1");
        const std::size_t drop = (n - n_time) / 2;
        out.t.assign(out.t.begin() + drop, out.t.end() - drop);
        out.values.assign(out.values.begin() + drop, out.values.end() - drop);
    }
    finish(out);
    return out;
}

std::complex<double> decay_envelope(const MorseParams& p, double t) {
    if (!p.is_wavelet()) throw std::domain_error("decay_envelope: beta and gamma must be positive");
    if (t == 0.0) throw std::invalid_argument("decay_envelope: t must be nonzero");
    const double at = std::fabs(t);
    const double log_mag = log_normalization(p) + log_gamma(p.beta + 1.0) -
                           (p.beta + 1.0) * std::log(at) - std::log(2.0 * kPi);
    const double phase = kPi * (p.beta + 1.0) / 2.0;
    const std::complex<double> env = std::exp(log_mag) *
                                     std::complex<double>(std::cos(phase), std::sin(phase));
    return t > 0.0 ? env : std::conj(env);
}

std::vector<double> sinusoid_limit_check(const MorseParams& p, int n_max) {
    if (!p.is_wavelet())
        throw std::domain_error("sinusoid_limit_check: beta and gamma must be positive");
    if (n_max < 0 || n_max > 20)
        throw std::invalid_argument("sinusoid_limit_check: n_max in [0, 20] required");
    const double log_peak = std::log(p.beta / p.gamma) / p.gamma;
    const double base = log_gamma((p.beta + 1.0) / p.gamma);
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        out[static_cast<std::size_t>(n)] =
            std::exp(log_gamma((p.beta + 1.0 + n) / p.gamma) - base - n * log_peak);
    return out;
}

}  // namespace morsekit
