#pragma once

#include "morsekit/morse.hpp"
#include "morsekit/sampling.hpp"

namespace morsekit {

// Morlet wavelet with carrier frequency nu > 0:
//   psi(t)     = (a/sqrt(2 pi)) exp(-t^2/2) [exp(i nu t) - exp(-nu^2/2)]
//   Psi(omega) = a [exp(-(omega-nu)^2/2) - exp(-(omega^2+nu^2)/2)]
// The subtracted term removes the mean; Psi(0) = 0 exactly.
struct MorletParams {
    double carrier = 0.0;  // nu
};

// Spectral peak omega_nu, the root of (omega - nu) = omega exp(-omega nu) on
// (nu, nu + 1), and the normalization a_nu making Psi(omega_nu) = 2.
struct MorletSolution {
    double peak_frequency = 0.0;
    double normalization = 0.0;
    double residual = 0.0;  // |(omega - nu) - omega exp(-omega nu)| at the root
};
MorletSolution peak_from_carrier(double nu);

// Spectrum values; negative frequencies carry the (small) correction-term tail.
double morlet_spectrum_value(const MorletParams& p, double omega);
SpectralWavelet morlet_spectrum(const MorletParams& p, const std::vector<double>& omega,
                                double scale = 1.0);

SampledWavelet morlet_time(const MorletParams& p, const std::vector<double>& t);

// Demodulate duration P_nu = omega_nu sqrt(omega_nu (omega_nu - nu) + 1).
double morlet_duration(double nu);

// Full scalar report; closed forms where available, adaptive quadrature of
// the closed-form spectrum for the integral quantities.
PropertyReport morlet_property_report(const MorletParams& p);

}  // namespace morsekit
