#include "morsekit/morse.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "morsekit/special_functions.hpp"

namespace morsekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn2 = 0.693147180559945309417232121458176568;

void require_wavelet(const MorseParams& p, const char* who) {
    if (!p.is_wavelet()) throw std::domain_error(std::string(who) + ": requires beta > 0 and gamma > 0");
}

// ln M_n for arbitrary beta >= 0 (the beta = 0 amplitude is fixed at 2).
double log_moment(double beta, double gamma, int n) {
    const double log_a =
        beta > 0.0 ? kLn2 + (beta / gamma) * (1.0 + std::log(gamma) - std::log(beta)) : kLn2;
    return log_a - std::log(2.0 * kPi * gamma) + log_gamma((beta + 1.0 + n) / gamma);
}

// ln of N_{0;b,gamma} / a_{b,gamma}^2 = Gamma((2b+1)/gamma) / (2 pi gamma 2^((2b+1)/gamma)).
// The normalization ratio a_{2b}/a_b^2 = 2^(-2b/gamma - 1) cancels algebraically,
// so the combination stays defined for b <= 0 as long as 2b + 1 > 0.
double log_energy_mass(double b, double gamma) {
    const double s = (2.0 * b + 1.0) / gamma;
    return log_gamma(s) - std::log(2.0 * kPi * gamma) - s * kLn2;
}

}  // namespace

double log_normalization(const MorseParams& p) {
    if (!p.is_wavelet())
        throw std::domain_error(
            "normalization: requires beta > 0 and gamma > 0 (the beta = 0 filter is "
            "pinned at amplitude 2 and has no normalization constant)");
    return kLn2 + (p.beta / p.gamma) * (1.0 + std::log(p.gamma) - std::log(p.beta));
}

double normalization(const MorseParams& p) { return std::exp(log_normalization(p)); }

double peak_frequency(const MorseParams& p) {
    require_wavelet(p, "peak_frequency");
    return std::pow(p.beta / p.gamma, 1.0 / p.gamma);
}

double spectrum_value(const MorseParams& p, double omega) {
    if (omega <= 0.0) return 0.0;
    if (p.beta == 0.0 && p.gamma == 0.0) return 2.0;  // bare analytic projection
    if (!(p.gamma > 0.0) || p.beta < 0.0)
        throw std::domain_error("spectrum_value: invalid parameters");
    const double log_a = p.beta > 0.0 ? log_normalization(p) : kLn2;  // beta = 0 bandpass
    const double log_v = log_a + (p.beta > 0.0 ? p.beta * std::log(omega) : 0.0) -
                         std::pow(omega, p.gamma);
    return std::exp(log_v);
}

SpectralWavelet evaluate_spectrum(const MorseParams& p, const std::vector<double>& omega,
                                  double scale) {
    if (omega.size() < 2 || omega.front() != 0.0)
        throw std::invalid_argument("evaluate_spectrum: grid must start at 0 with >= 2 points");
    const double step = omega[1] - omega[0];
    if (!(step > 0.0)) throw std::invalid_argument("evaluate_spectrum: grid must increase");
    for (std::size_t i = 1; i < omega.size(); ++i)
        if (std::fabs(omega[i] - omega[i - 1] - step) > 1e-9 * step)
            throw std::invalid_argument("evaluate_spectrum: grid must be uniform");
    if (!(scale > 0.0)) throw std::invalid_argument("evaluate_spectrum: scale must be positive");
    SpectralWavelet out;
    out.omega = omega;
    out.scale = scale;
    out.values.resize(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i)
        out.values[i] = spectrum_value(p, scale * omega[i]);
    return out;
}

MomentSet moments(const MorseParams& p, int n_max) {
    if (n_max < 0 || n_max > 20) throw std::invalid_argument("moments: n_max must be in [0, 20]");
    if (!(p.gamma > 0.0) || p.beta < 0.0) throw std::domain_error("moments: invalid parameters");
    MomentSet out;
    out.moments.resize(n_max + 1);
    out.energy_moments.resize(n_max + 1);
    out.cumulants.resize(n_max + 1);
    const double log_m0 = log_moment(p.beta, p.gamma, 0);
    std::vector<double> ratio(n_max + 1);  // M_n / M_0
    for (int n = 0; n <= n_max; ++n) {
        const double log_mn = log_moment(p.beta, p.gamma, n);
        out.moments[n] = std::exp(log_mn);
        ratio[n] = std::exp(log_mn - log_m0);
        out.energy_moments[n] =
            std::exp(kLn2 - (1.0 + n) / p.gamma * kLn2 + log_moment(2.0 * p.beta, p.gamma, n));
    }
    out.cumulants[0] = log_m0;
    for (int n = 1; n <= n_max; ++n) {
        double acc = ratio[n];
        for (int k = 1; k < n; ++k)
            acc -= binomial(n - 1, k - 1) * out.cumulants[k] * ratio[n - k];
        out.cumulants[n] = acc;
    }
    return out;
}

FrequencyMeasures frequency_measures(const MorseParams& p) {
    require_wavelet(p, "frequency_measures");
    FrequencyMeasures out;
    out.peak = peak_frequency(p);
    out.energy = std::exp(-kLn2 / p.gamma + log_gamma((2.0 * p.beta + 2.0) / p.gamma) -
                          log_gamma((2.0 * p.beta + 1.0) / p.gamma));
    out.central = std::exp(log_gamma((p.beta + 2.0) / p.gamma) -
                           log_gamma((p.beta + 1.0) / p.gamma));
    const MomentSet m = moments(p, 3);
    out.curvature = -m.cumulants[3] / std::pow(m.cumulants[2], 1.5);
    return out;
}

DemodulateStats demodulate_stats(const MorseParams& p) {
    require_wavelet(p, "demodulate_stats");
    DemodulateStats out;
    out.duration = std::sqrt(p.beta * p.gamma);
    out.skewness_imag = (p.gamma - 3.0) / out.duration;
    out.kurtosis = 3.0 - out.skewness_imag * out.skewness_imag -
                   2.0 / (out.duration * out.duration);
    return out;
}

std::vector<double> frequency_derivatives_at_peak(const MorseParams& p, int n_max) {
    require_wavelet(p, "frequency_derivatives_at_peak");
    if (n_max < 0 || n_max > 10)
        throw std::invalid_argument("frequency_derivatives_at_peak: n_max must be in [0, 10]");
    std::vector<double> out(n_max + 1);
    out[0] = 1.0;
    if (n_max == 0) return out;
    // c_k = omega^k d^k/domega^k ln Psi at the peak, where omega^gamma = beta/gamma:
    // c_k = (-1)^(k-1) (k-1)! beta - beta prod_{j=1}^{k-1} (gamma - j), so the
    // first log-derivative c_1 = beta - beta cancels exactly (peak condition).
    std::vector<std::complex<double>> c(n_max);
    double factorial = 1.0;   // (k-1)!
    double falling = 1.0;     // prod_{1 <= j < k} (gamma - j)
    for (int k = 1; k <= n_max; ++k) {
        if (k > 1) {
            factorial *= (k - 1);
            falling *= (p.gamma - (k - 1));
        }
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        c[k - 1] = sign * factorial * p.beta - p.beta * falling;
    }
    for (int n = 1; n <= n_max; ++n) {
        BellCoefficients head{std::vector<std::complex<double>>(c.begin(), c.begin() + n)};
        out[n] = complete_bell(head).real();
    }
    return out;
}

Concentration concentration(const MorseParams& p) {
    require_wavelet(p, "concentration");
    if (!(2.0 * p.beta > 1.0))
        throw std::domain_error("concentration: time spread diverges unless 2 beta > 1");
    const double w = peak_frequency(p);
    const double log_e_beta = log_energy_mass(p.beta, p.gamma);
    const double t1 = p.beta * p.beta *
                      std::exp(log_energy_mass(p.beta - 1.0, p.gamma) - log_e_beta);
    const double t2 = p.gamma * p.gamma *
                      std::exp(log_energy_mass(p.beta - 1.0 + p.gamma, p.gamma) - log_e_beta);
    const double t3 = 2.0 * p.beta * p.gamma *
                      std::exp(log_energy_mass(p.beta - 1.0 + 0.5 * p.gamma, p.gamma) - log_e_beta);
    Concentration out;
    out.sigma_t = w * std::sqrt(t1 + t2 - t3);
    const double n2_over_n0 =
        std::exp(-2.0 * kLn2 / p.gamma + log_gamma((2.0 * p.beta + 3.0) / p.gamma) -
                 log_gamma((2.0 * p.beta + 1.0) / p.gamma));
    const double energy = std::exp(-kLn2 / p.gamma + log_gamma((2.0 * p.beta + 2.0) / p.gamma) -
                                   log_gamma((2.0 * p.beta + 1.0) / p.gamma));
    out.sigma_omega = std::sqrt((n2_over_n0 - energy * energy)) / w;
    out.area = out.sigma_t * out.sigma_omega;
    return out;
}

double admissibility(const MorseParams& p) {
    require_wavelet(p, "admissibility");
    const double r = 2.0 * p.beta / p.gamma;
    return std::exp(2.0 * log_normalization(p) - std::log(kPi * p.gamma) - (r + 1.0) * kLn2 +
                    log_gamma(r));
}

double convergence_radius(const MorseParams& p) {
    require_wavelet(p, "convergence_radius");
    if (p.gamma < 1.0)
        throw std::domain_error("convergence_radius: undefined for gamma < 1");
    if (p.gamma == 1.0) return 1.0;
    return std::numeric_limits<double>::infinity();
}

std::complex<double> time_series_partial_sum(const MorseParams& p, double t, int n_terms) {
    const MomentSet m = moments(p, n_terms);
    std::complex<double> sum = 0.0;
    std::complex<double> it_pow = 1.0;  // (it)^n / n!
    for (int n = 0; n <= n_terms; ++n) {
        if (n > 0) it_pow *= std::complex<double>(0.0, t) / static_cast<double>(n);
        sum += it_pow * m.moments[n];
    }
    return sum;
}

MorseParams params_from_duration_skewness(double duration, double skewness_imag) {
    if (!(duration > 0.0))
        throw std::domain_error("params_from_duration_skewness: duration must be positive");
    const double gamma = skewness_imag * duration + 3.0;
    if (!(gamma > 0.0))
        throw std::domain_error(
            "params_from_duration_skewness: skewness at or below -3/duration has no solution");
    return MorseParams{duration * duration / gamma, gamma};
}

PropertyReport property_report(const MorseParams& p) {
    require_wavelet(p, "property_report");
    PropertyReport r;
    const FrequencyMeasures f = frequency_measures(p);
    r.peak_frequency = f.peak;
    r.energy_frequency = f.energy;
    r.central_frequency = f.central;
    r.curvature = f.curvature;
    const DemodulateStats d = demodulate_stats(p);
    r.duration = d.duration;
    r.skewness_imag = d.skewness_imag;
    r.kurtosis = d.kurtosis;
    if (2.0 * p.beta > 1.0) {
        const Concentration c = concentration(p);
        r.sigma_t = c.sigma_t;
        r.sigma_omega = c.sigma_omega;
        r.heisenberg_area = c.area;
    } else {
        r.sigma_t = std::numeric_limits<double>::quiet_NaN();
        r.sigma_omega = std::numeric_limits<double>::quiet_NaN();
        r.heisenberg_area = std::numeric_limits<double>::quiet_NaN();
    }
    r.admissibility = admissibility(p);
    return r;
}

}  // namespace morsekit
