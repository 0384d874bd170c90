#include "morsekit/wavelet.hpp"

#include <cmath>
#include <stdexcept>

#include "morsekit/quadrature.hpp"

namespace morsekit {

double AnalyticWavelet::frequency_for(FrequencyConvention c) const {
    switch (c) {
        case FrequencyConvention::peak: return peak_frequency();
        case FrequencyConvention::energy: return energy_frequency();
        case FrequencyConvention::instantaneous: return central_frequency();
    }
    throw std::invalid_argument("frequency_for: unknown convention");
}

MorseWavelet::MorseWavelet(MorseParams p) : params_(p) {
    if (!p.is_wavelet())
        throw std::domain_error("MorseWavelet: beta and gamma must be positive");
    const FrequencyMeasures f = frequency_measures(p);
    peak_ = f.peak;
    energy_ = f.energy;
    central_ = f.central;
    duration_ = std::sqrt(p.beta * p.gamma);
}

double MorseWavelet::spectrum(double omega) const { return spectrum_value(params_, omega); }

double MorseWavelet::peak_derivative(int n) const {
    const double bg = params_.beta * params_.gamma;
    const double g = params_.gamma;
    if (n == 2) return -bg;
    if (n == 3) return -bg * (g - 3.0);
    throw std::invalid_argument("peak_derivative: n must be 2 or 3");
}

std::string MorseWavelet::name() const {
    return "morse(beta=" + std::to_string(params_.beta) +
           ",gamma=" + std::to_string(params_.gamma) + ")";
}

MorletWavelet::MorletWavelet(double carrier)
    : carrier_(carrier), solution_(peak_from_carrier(carrier)) {
    correction_ = std::exp(-0.5 * carrier_ * carrier_);
    central_ = carrier_ / (1.0 - correction_);
    duration_ = morlet_duration(carrier_);
    const double nu = carrier_;
    const double lo = -(nu + 12.0), hi = nu + 13.0;
    auto e = [this](double w) {
        const double v = spectrum(w);
        return v * v;
    };
    auto we = [this](double w) {
        const double v = spectrum(w);
        return w * v * v;
    };
    auto piecewise = [&](auto f) {
        return integrate(f, lo, 0.0, 1e-11) + integrate(f, 0.0, nu, 1e-11) +
               integrate(f, nu, hi, 1e-11);
    };
    energy_ = piecewise(we) / piecewise(e);
}

double MorletWavelet::spectrum(double omega) const {
    return solution_.normalization *
           (std::exp(-0.5 * (omega - carrier_) * (omega - carrier_)) -
            std::exp(-0.5 * omega * omega) * correction_);
}

double MorletWavelet::peak_derivative(int n) const {
    const double w = solution_.peak_frequency;
    const double d = w * std::exp(-w * carrier_);
    if (n == 2) return -w * w * (1.0 + w * d);
    if (n == 3) return w * w * w * w * d * (w + d);
    throw std::invalid_argument("peak_derivative: n must be 2 or 3");
}

std::string MorletWavelet::name() const { return "morlet(nu=" + std::to_string(carrier_) + ")"; }

}  // namespace morsekit
