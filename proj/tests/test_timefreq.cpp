#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "morsekit/closed_forms.hpp"
#include "morsekit/morlet.hpp"
#include "morsekit/morse.hpp"
#include "morsekit/sampling.hpp"
#include "morsekit/timefreq.hpp"
#include "morsekit/wavelet.hpp"
#include "oracles.hpp"

using namespace morsekit;
using C = std::complex<double>;

namespace {

std::vector<double> one_sided_grid(double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = hi * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

SampledWavelet sample_morse(double beta, double gamma, double wmax, std::size_t m,
                            std::size_t n_time) {
    return spectral_inverse(evaluate_spectrum({beta, gamma}, one_sided_grid(wmax, m)), n_time);
}

// Ratio moments of the normalized spectrum omega^beta e^(-omega^gamma) as a
// probability density; cumulants follow from the gamma-function closed form.
double spectral_moment_ratio(double beta, double gamma, double n) {
    return std::tgamma((beta + n + 1.0) / gamma) / std::tgamma((beta + 1.0) / gamma);
}

struct Extremes {
    double vmax = 0.0;
    double negmax = 0.0;
};

Extremes scan(const WignerVille& wv) {
    Extremes e;
    for (std::size_t j = 0; j < wv.times.size(); ++j)
        for (std::size_t l = 0; l < wv.frequencies.size(); ++l) {
            e.vmax = std::max(e.vmax, std::fabs(wv.at(j, l)));
            if (wv.frequencies[l] < 0.0) e.negmax = std::max(e.negmax, std::fabs(wv.at(j, l)));
        }
    return e;
}

}  // namespace

TEST_CASE("Morse Wigner-Ville density lives entirely at positive frequencies") {
    // Window wide enough that the t^-5 tails sit near 1e-9 of the peak.
    const SampledWavelet w = sample_morse(4.0, 3.0, 8.0, 4097, 769);
    REQUIRE(std::abs(w.values.front()) < 2e-9 * std::abs(w.values[w.values.size() / 2]));
    const double dt = w.t[1] - w.t[0];
    const WignerVille wv = wigner_ville(w, 4);

    CHECK_FALSE(wv.aliasing_warning);
    REQUIRE(wv.times.size() == w.t.size());
    CHECK(wv.times == w.t);
    REQUIRE(wv.values.size() == wv.times.size() * wv.frequencies.size());
    for (std::size_t l = 1; l < wv.frequencies.size(); ++l)
        CHECK(wv.frequencies[l] > wv.frequencies[l - 1]);

    const Extremes e = scan(wv);
    CHECK(e.vmax > 0.0);
    CHECK(e.negmax < 1e-9 * e.vmax);
    CHECK(wv.imag_residual < 1e-12 * e.vmax);

    // Frequency marginal equals |Psi(omega)|^2 at the passband peak.
    const double wpk = std::pow(4.0 / 3.0, 1.0 / 3.0);
    std::size_t lpk = 0;
    for (std::size_t l = 1; l < wv.frequencies.size(); ++l)
        if (std::fabs(wv.frequencies[l] - wpk) < std::fabs(wv.frequencies[lpk] - wpk)) lpk = l;
    double marginal = 0.0;
    for (std::size_t j = 0; j < wv.times.size(); ++j) marginal += wv.at(j, lpk) * dt;
    const double psi2 = std::pow(spectrum_value({4, 3}, wv.frequencies[lpk]), 2);
    CHECK(marginal == doctest::Approx(psi2).epsilon(1e-6));

    // Total density integral equals the wavelet energy.
    const double dw = wv.frequencies[1] - wv.frequencies[0];
    double total = 0.0;
    for (double v : wv.values) total += v;
    total *= dt * dw / (2.0 * oracle::kPi);
    double energy = 0.0;
    for (auto v : w.values) energy += std::norm(v) * dt;
    CHECK(total == doctest::Approx(energy).epsilon(1e-10));
}

TEST_CASE("Wigner-Ville distribution shifts with the wavelet") {
    const SampledWavelet w = sample_morse(4.0, 3.0, 8.0, 4097, 769);
    const WignerVille base = wigner_ville(w, 4);
    SampledWavelet shifted = w;
    std::rotate(shifted.values.rbegin(), shifted.values.rbegin() + 3, shifted.values.rend());
    const WignerVille moved = wigner_ville(shifted, 4);
    const double vmax = scan(base).vmax;
    double worst = 0.0;
    for (std::size_t j = 3; j < base.times.size(); ++j)
        for (std::size_t l = 0; l < base.frequencies.size(); ++l)
            worst = std::max(worst, std::fabs(moved.at(j, l) - base.at(j - 3, l)));
    CHECK(worst < 1e-8 * vmax);
}

TEST_CASE("parallel and serial Wigner-Ville engines are bit-identical") {
    const SampledWavelet w = sample_morse(3.0, 3.0, 8.0, 2049, 257);
    const WignerVille a = wigner_ville(w, 2);
    const WignerVille b = wigner_ville_serial(w, 2);
    CHECK(a.times == b.times);
    CHECK(a.frequencies == b.frequencies);
    CHECK(a.values == b.values);
    CHECK(a.imag_residual == b.imag_residual);
    CHECK(a.aliasing_warning == b.aliasing_warning);
}

TEST_CASE("a short-duration Morlet leaks to negative frequencies") {
    // Carrier chosen so the duration is sqrt(3), i.e. P/pi ~ 0.55.
    const double nu = 1.2863919707;
    std::vector<double> t(241);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = 0.1 * (static_cast<double>(i) - 120.0);
    const SampledWavelet w = morlet_time({nu}, t);
    const WignerVille wv = wigner_ville(w, 4);
    CHECK_FALSE(wv.aliasing_warning);
    const Extremes e = scan(wv);
    CHECK(e.negmax > 1e-4 * e.vmax);
    CHECK(e.negmax > 0.1 * e.vmax);
}

TEST_CASE("truncated windows raise the aliasing warning") {
    const SampledWavelet w = sample_morse(4.0, 3.0, 8.0, 4097, 31);
    REQUIRE(std::abs(w.values.front()) > 1e-6 * std::abs(w.values[15]));
    CHECK(wigner_ville(w, 2).aliasing_warning);
}

TEST_CASE("Wigner-Ville validates its inputs") {
    const SampledWavelet w = sample_morse(3.0, 3.0, 8.0, 2049, 257);
    CHECK_THROWS_AS(wigner_ville(w, 1), std::invalid_argument);
    CHECK_THROWS_AS(wigner_ville(w, 0), std::invalid_argument);
    SampledWavelet zero = w;
    zero.values.assign(zero.values.size(), C(0.0, 0.0));
    CHECK_THROWS_AS(wigner_ville(zero, 2), std::invalid_argument);
    SampledWavelet even = w;
    even.t.pop_back();
    even.values.pop_back();
    CHECK_THROWS_AS(wigner_ville(even, 2), std::invalid_argument);
    SampledWavelet skewed = w;
    skewed.t[5] += 0.01;
    CHECK_THROWS_AS(wigner_ville(skewed, 2), std::invalid_argument);
}

TEST_CASE("Wigner-Ville indexing is row-major by time") {
    WignerVille wv;
    wv.times = {0.0, 1.0};
    wv.frequencies = {-1.0, 0.0, 1.0};
    wv.values = {0, 1, 2, 3, 4, 5};
    CHECK(wv.index(0, 2) == 2);
    CHECK(wv.index(1, 0) == 3);
    CHECK(wv.at(1, 2) == 5.0);
}

TEST_CASE("gamma=3 instantaneous frequency is flat across the central window") {
    const double beta = 4.0, gamma = 3.0;
    const SampledWavelet w = sample_morse(beta, gamma, 8.0, 4097, 489);
    const InstantaneousFrequency f = instantaneous_frequency(w);
    REQUIRE(f.t == w.t);
    const MorseWavelet mw({beta, gamma});
    const double wpk = mw.peak_frequency();
    // sigma_t = P / omega_peak is the demodulate standard deviation.
    const double sigma_t = std::sqrt(beta * gamma) / wpk;
    double worst = 0.0;
    for (std::size_t i = 0; i < f.t.size(); ++i)
        if (std::fabs(f.t[i]) < sigma_t)
            worst = std::max(worst, std::fabs(f.omega[i] / wpk - 1.0));
    CHECK(worst < 8e-3);

    // At the center the phase rate is the first spectral cumulant.
    const std::size_t mid = f.t.size() / 2;
    const double k1 = spectral_moment_ratio(beta, gamma, 1.0);
    CHECK(f.omega[mid] == doctest::Approx(k1).epsilon(1e-8));
    CHECK(f.omega[mid] == doctest::Approx(mw.central_frequency()).epsilon(1e-8));

    // Energy-weighted mean of the phase rate recovers the energy frequency.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.t.size(); ++i) {
        if (std::isnan(f.omega[i])) continue;
        const double e = std::norm(w.values[i]);
        num += e * f.omega[i];
        den += e;
    }
    CHECK(num / den == doctest::Approx(mw.energy_frequency()).epsilon(1e-10));

    // The far tails sit below the masking threshold and report NaN.
    CHECK(std::isnan(f.omega.front()));
    CHECK(std::isnan(f.omega.back()));
    CHECK_FALSE(std::isnan(f.omega[mid]));
}

TEST_CASE("gamma=2 instantaneous frequency is concave with the predicted curvature") {
    const double beta = 4.0, gamma = 2.0;
    const SampledWavelet w = sample_morse(beta, gamma, 8.0, 4097, 129);
    const InstantaneousFrequency f = instantaneous_frequency(w);
    const std::size_t mid = f.t.size() / 2;
    const double dt = f.t[1] - f.t[0];

    bool center_is_max = true;
    for (std::size_t i = 0; i < f.t.size(); ++i)
        if (!std::isnan(f.omega[i]) && f.omega[i] > f.omega[mid]) center_is_max = false;
    CHECK(center_is_max);

    const double k1 = spectral_moment_ratio(beta, gamma, 1.0);
    const double m2 = spectral_moment_ratio(beta, gamma, 2.0);
    const double m3 = spectral_moment_ratio(beta, gamma, 3.0);
    const double k2 = m2 - k1 * k1;
    const double k3 = m3 - 3.0 * k1 * m2 + 2.0 * k1 * k1 * k1;
    CHECK(f.omega[mid] == doctest::Approx(k1).epsilon(1e-6));

    // Dimensionless curvature at the center equals minus the spectral skewness.
    const double d2 = (f.omega[mid + 1] - 2.0 * f.omega[mid] + f.omega[mid - 1]) / (dt * dt);
    const double normalized = d2 / std::pow(k2, 1.5);
    const double predicted = -k3 / std::pow(k2, 1.5);
    CHECK(predicted < 0.0);
    CHECK(normalized == doctest::Approx(predicted).epsilon(0.05));
    CHECK(normalized == doctest::Approx(predicted).epsilon(1e-2));
}

TEST_CASE("instantaneous frequency validates its grid") {
    SampledWavelet bad;
    bad.t = {0.0, 0.1};
    bad.values = {C(1.0, 0.0), C(1.0, 0.0)};
    CHECK_THROWS_AS(instantaneous_frequency(bad), std::invalid_argument);
    // A numerically zero wavelet has no valid region: every sample masks.
    SampledWavelet zero;
    zero.t = {-0.1, 0.0, 0.1};
    zero.values.assign(3, C(0.0, 0.0));
    const InstantaneousFrequency f = instantaneous_frequency(zero);
    for (double v : f.omega) CHECK(std::isnan(v));
}
