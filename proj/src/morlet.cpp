#include "morsekit/morlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "morsekit/quadrature.hpp"

namespace morsekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_carrier(double nu, const char* who) {
    if (!(nu > 0.0)) throw std::domain_error(std::string(who) + ": carrier must be positive");
}

double spectrum_core(double nu, double corr, double w) {
    return std::exp(-0.5 * (w - nu) * (w - nu)) - std::exp(-0.5 * w * w) * corr;
}

double spectrum_core_derivative(double nu, double corr, double w) {
    return -(w - nu) * std::exp(-0.5 * (w - nu) * (w - nu)) +
           w * std::exp(-0.5 * w * w) * corr;
}

}  // namespace

MorletSolution peak_from_carrier(double nu) {
    require_carrier(nu, "peak_from_carrier");
    // F(w) = (w - nu) - w exp(-w nu) is strictly increasing on (0, inf) with
    // F(nu) < 0 < F(nu + 1).
    auto excess = [nu](double w) { return (w - nu) - w * std::exp(-w * nu); };
    double lo = nu, hi = nu + 1.0;
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    const double w = 0.5 * (lo + hi);
    const double d = w * std::exp(-w * nu);  // = w - nu at the root
    MorletSolution out;
    out.peak_frequency = w;
    out.normalization = 2.0 * (w / nu) * std::exp(0.5 * d * d);
    out.residual = std::fabs(excess(w));
    return out;
}

double morlet_spectrum_value(const MorletParams& p, double omega) {
    require_carrier(p.carrier, "morlet_spectrum_value");
    const MorletSolution s = peak_from_carrier(p.carrier);
    const double nu = p.carrier;
    return s.normalization * spectrum_core(nu, std::exp(-0.5 * nu * nu), omega);
}

SpectralWavelet morlet_spectrum(const MorletParams& p, const std::vector<double>& omega,
                                double scale) {
    require_carrier(p.carrier, "morlet_spectrum");
    if (omega.empty()) throw std::invalid_argument("morlet_spectrum: empty grid");
    if (!(scale > 0.0)) throw std::invalid_argument("morlet_spectrum: scale must be positive");
    const MorletSolution s = peak_from_carrier(p.carrier);
    const double nu = p.carrier;
    const double corr = std::exp(-0.5 * nu * nu);
    SpectralWavelet out;
    out.omega = omega;
    out.scale = scale;
    out.values.resize(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i)
        out.values[i] = s.normalization * spectrum_core(nu, corr, scale * omega[i]);
    return out;
}

SampledWavelet morlet_time(const MorletParams& p, const std::vector<double>& t) {
    require_carrier(p.carrier, "morlet_time");
    if (t.size() < 3 || t.size() % 2 == 0)
        throw std::invalid_argument("morlet_time: odd sample count of at least 3 required");
    const double dt = t[1] - t[0];
    if (!(dt > 0.0)) throw std::invalid_argument("morlet_time: grid must be increasing");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (std::fabs(t[i] - t[i - 1] - dt) > 1e-8 * dt)
            throw std::invalid_argument("morlet_time: grid must be uniform");
    const MorletSolution s = peak_from_carrier(p.carrier);
    const double nu = p.carrier;
    const double corr = std::exp(-0.5 * nu * nu);
    const double coeff = s.normalization / std::sqrt(2.0 * kPi);
    SampledWavelet out;
    out.t = t;
    out.source = "morlet";
    out.values.resize(t.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double ti = t[i];
        out.values[i] = coeff * std::exp(-0.5 * ti * ti) *
                        std::complex<double>(std::cos(nu * ti) - corr, std::sin(nu * ti));
        peak = std::max(peak, std::abs(out.values[i]));
    }
    const double edge = std::max(std::abs(out.values.front()), std::abs(out.values.back()));
    out.aliasing_warning = edge > 1e-6 * peak;
    return out;
}

double morlet_duration(double nu) {
    const MorletSolution s = peak_from_carrier(nu);
    const double w = s.peak_frequency;
    return w * std::sqrt(w * (w * std::exp(-w * nu)) + 1.0);
}

PropertyReport morlet_property_report(const MorletParams& p) {
    require_carrier(p.carrier, "morlet_property_report");
    const double nu = p.carrier;
    const MorletSolution s = peak_from_carrier(nu);
    const double a = s.normalization;
    const double w = s.peak_frequency;
    const double d = w * std::exp(-w * nu);  // peak excess over the carrier
    const double corr = std::exp(-0.5 * nu * nu);

    PropertyReport r;
    r.peak_frequency = w;
    r.central_frequency = nu / (1.0 - corr);

    // log-derivatives of the spectrum at the peak:
    //   c2 = -w^2 (1 + w d),  Bell combinations give the normalized moments.
    const double p2 = w * w * (1.0 + w * d);
    const double psi3 = w * w * w * w * d * (w + d);
    const double psi4 = 3.0 * p2 * p2 -
                        w * w * w * w * w * d * (w * w + 4.0 * w * d + d * d);
    r.duration = std::sqrt(p2);
    r.skewness_imag = -psi3 / (p2 * r.duration);
    r.kurtosis = psi4 / (p2 * p2);

    const double lo = -(nu + 12.0), hi = nu + 13.0;
    auto psi = [a, nu, corr](double x) { return a * spectrum_core(nu, corr, x); };
    auto piecewise = [&](auto f) {
        return integrate(f, lo, 0.0, 1e-11) + integrate(f, 0.0, nu, 1e-11) +
               integrate(f, nu, hi, 1e-11);
    };

    // Signed spectrum moments feed the frequency-modulation cumulants.
    const double m0 = piecewise([&](double x) { return psi(x); });
    const double m1 = piecewise([&](double x) { return x * psi(x); });
    const double m2 = piecewise([&](double x) { return x * x * psi(x); });
    const double m3 = piecewise([&](double x) { return x * x * x * psi(x); });
    const double r1 = m1 / m0, r2 = m2 / m0, r3 = m3 / m0;
    const double k2 = r2 - r1 * r1;
    const double k3 = r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1;
    // The negative-frequency lobe makes the signed spectrum a non-density for
    // small carriers; once its second cumulant is nonpositive the curvature
    // measure has no value.
    r.curvature = k2 > 0.0 ? -k3 / std::pow(k2, 1.5)
                           : std::numeric_limits<double>::quiet_NaN();

    // Energy moments of |Psi|^2 give the spreads.
    const double n0 = piecewise([&](double x) { const double v = psi(x); return v * v; });
    const double n1 = piecewise([&](double x) { const double v = psi(x); return x * v * v; });
    const double n2 = piecewise([&](double x) { const double v = psi(x); return x * x * v * v; });
    r.energy_frequency = n1 / n0;
    r.sigma_omega = std::sqrt(n2 / n0 - r.energy_frequency * r.energy_frequency) / w;
    const double dnorm = piecewise([&](double x) {
        const double v = a * spectrum_core_derivative(nu, corr, x);
        return v * v;
    });
    r.sigma_t = w * std::sqrt(dnorm / n0);
    r.heisenberg_area = r.sigma_t * r.sigma_omega;
    r.admissibility = piecewise([&](double x) {
                          if (x == 0.0) return 0.0;
                          const double v = psi(x);
                          return v * v / std::fabs(x);
                      }) /
                      (2.0 * kPi);
    return r;
}

}  // namespace morsekit
