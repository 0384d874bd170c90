#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "morsekit/wavelet.hpp"

namespace morsekit {

enum class BoundaryPolicy { zero, periodic, mirror };

// Log-uniform scale lattice: scales[k] = s_min 2^(k / voices), ascending.
struct ScaleGrid {
    std::vector<double> scales;
    double voices = 0.0;
    FrequencyConvention convention = FrequencyConvention::peak;
};

// Grid whose mapped frequencies cover [omega_lo, omega_hi] under the given
// convention at the requested voices per octave.
ScaleGrid make_scale_grid(const AnalyticWavelet& w, FrequencyConvention conv, double omega_lo,
                          double omega_hi, double voices);

// omega = (convention frequency)/s and its (self-inverse) counterpart.
double scale_to_frequency(const AnalyticWavelet& w, FrequencyConvention conv, double s);
double frequency_to_scale(const AnalyticWavelet& w, FrequencyConvention conv, double omega);

// Transform coefficients, scales by times, row-major per scale.
struct Scalogram {
    std::vector<double> times;
    std::vector<double> scales;
    std::vector<std::complex<double>> coefficients;
    FrequencyConvention convention = FrequencyConvention::peak;
    BoundaryPolicy boundary = BoundaryPolicy::periodic;

    std::size_t index(std::size_t scale_idx, std::size_t time_idx) const {
        return scale_idx * times.size() + time_idx;
    }
    std::complex<double> at(std::size_t scale_idx, std::size_t time_idx) const {
        return coefficients[index(scale_idx, time_idx)];
    }
};

// W(t, s) = (1/2pi) integral conj(Psi(s omega)) X(omega) e^(i omega t) domega
// with 1/s-free normalization carried by the unit-peak spectrum. The signal is
// extended per the boundary policy before the transform. Scales must satisfy
// s * omega_Nyquist >= omega_peak. Parallel over scales; cwt_serial is the
// single-thread reference that produces bit-identical coefficients.
Scalogram cwt(const std::vector<std::complex<double>>& x, double dt, const AnalyticWavelet& w,
              const ScaleGrid& grid, BoundaryPolicy boundary);
Scalogram cwt(const std::vector<double>& x, double dt, const AnalyticWavelet& w,
              const ScaleGrid& grid, BoundaryPolicy boundary);
Scalogram cwt_serial(const std::vector<std::complex<double>>& x, double dt,
                     const AnalyticWavelet& w, const ScaleGrid& grid, BoundaryPolicy boundary);

// First moment of scale under the |W|^2 density at one time slice, with
// trapezoid coverage weights so the log-spaced lattice approximates the
// continuous ds integral. truncated flags endpoint energy above 1e-3 of max.
struct EnergyMeanScale {
    double scale = 0.0;
    bool truncated = false;
};
EnergyMeanScale energy_mean_scale(const Scalogram& sg, std::size_t time_idx);

// Amplitude-and-phase description of a modulated oscillation a_+ e^(i phi_+).
struct ModulatedSignal {
    std::vector<double> t;
    std::vector<double> amplitude;
    std::vector<double> phase;
};

// Ridge-scale transform prediction: x_+ times the second- and third-order
// modulation correction, with derivatives taken by central differences
// (edges replicate the nearest interior value).
std::vector<std::complex<double>> predict_ridge_response(const ModulatedSignal& sig,
                                                         const AnalyticWavelet& w);

// Gaussian-enveloped quadratic-phase signal x(t) = e^(-t^2/2 width^2)
// cos(rate t^2 / 2) on an odd symmetric grid spanning [-duration/2, duration/2].
// The descriptor carries the envelope and phase curves for reference; its
// phase derivative passes through zero at t = 0.
struct ChirpSignal {
    std::vector<double> t;
    std::vector<double> x;
    ModulatedSignal descriptor;
};
ChirpSignal make_chirp(double duration, double rate, double envelope_width,
                       std::size_t n = 4097);

// Ripple measure along the per-time scale-argmax curve: population std of the
// second differences of |W| divided by the curve mean. Needs >= 8 time steps.
double interference_metric(const Scalogram& sg);

}  // namespace morsekit
