#pragma once

#include <cstddef>
#include <vector>

#include "morsekit/sampling.hpp"

namespace morsekit {

// Real time-frequency density on the wavelet's sample times and a signed,
// ascending radian frequency axis.
struct WignerVille {
    std::vector<double> times;
    std::vector<double> frequencies;
    std::vector<double> values;  // row-major [time][frequency]
    double imag_residual = 0.0;  // largest |Im| discarded when realizing values
    bool aliasing_warning = false;

    std::size_t index(std::size_t time_idx, std::size_t freq_idx) const {
        return time_idx * frequencies.size() + freq_idx;
    }
    double at(std::size_t time_idx, std::size_t freq_idx) const {
        return values[index(time_idx, freq_idx)];
    }
};

// WV(t, omega) = integral psi(t + tau/2) conj(psi(t - tau/2)) e^(-i omega tau)
// dtau on the wavelet's own time grid. Half-sample offsets come from
// oversample-fold spectral zero-padding (exact for band-limited samples).
// Parallel over time slices; the _serial variant is the bit-identical
// single-thread reference.
WignerVille wigner_ville(const SampledWavelet& w, int oversample = 2);
WignerVille wigner_ville_serial(const SampledWavelet& w, int oversample = 2);

// Phase rate Im{psi'(t)/psi(t)} with psi' by spectral differentiation.
// Samples where |psi| < 1e-8 max|psi| are reported as NaN.
struct InstantaneousFrequency {
    std::vector<double> t;
    std::vector<double> omega;
};
InstantaneousFrequency instantaneous_frequency(const SampledWavelet& w);

}  // namespace morsekit
