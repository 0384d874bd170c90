#pragma once

#include <complex>
#include <vector>

#include "morsekit/sampling.hpp"

namespace morsekit {

// Analytic wavelet family parameters: spectral rise power beta and envelope
// exponent gamma, Psi(omega) = U(omega) a omega^beta exp(-omega^gamma).
// beta == 0 degenerates to a bandpass filter (amplitude fixed at 2); gamma == 0
// with beta == 0 is the bare analytic projection 2 U(omega).
struct MorseParams {
    double beta = 0.0;
    double gamma = 0.0;
    bool is_wavelet() const { return beta > 0.0 && gamma > 0.0; }
};

// Peak-amplitude normalization a = 2 (e gamma / beta)^(beta/gamma); ln a for
// parameter ranges where a itself would over- or underflow.  Defined for
// wavelets only (beta = 0 filters are pinned at amplitude 2 instead).
double normalization(const MorseParams& p);
double log_normalization(const MorseParams& p);

// Frequency of maximum spectral magnitude, (beta/gamma)^(1/gamma); wavelets only.
double peak_frequency(const MorseParams& p);

// Single spectrum value at omega (0 for omega <= 0).
double spectrum_value(const MorseParams& p, double omega);

// Psi(scale * omega) over a uniform grid starting at 0.
SpectralWavelet evaluate_spectrum(const MorseParams& p, const std::vector<double>& omega,
                                  double scale = 1.0);

// Frequency-domain moments M_n, energy moments N_n, and cumulants K_n
// (K_0 = ln M_0), n = 0..n_max <= 20.  Gamma factors evaluated in log space.
struct MomentSet {
    std::vector<double> moments;
    std::vector<double> energy_moments;
    std::vector<double> cumulants;
};
MomentSet moments(const MorseParams& p, int n_max);

// The three scale-setting frequencies plus the dimensionless instantaneous-
// frequency curvature -K_3 / K_2^(3/2).
struct FrequencyMeasures {
    double peak;
    double energy;
    double central;
    double curvature;
};
FrequencyMeasures frequency_measures(const MorseParams& p);

// Demodulated-wavelet shape numbers: duration P = sqrt(beta gamma), the
// imaginary part of the demodulate skewness (gamma - 3)/P, and the
// demodulate kurtosis 3 - skew^2 - 2/P^2.
struct DemodulateStats {
    double duration;
    double skewness_imag;
    double kurtosis;
};
DemodulateStats demodulate_stats(const MorseParams& p);

// Normalized spectral derivatives omega^n Psi^(n)/Psi at the peak frequency
// for n = 0..n_max <= 10, built from the log-derivative sequence through the
// complete Bell polynomial.
std::vector<double> frequency_derivatives_at_peak(const MorseParams& p, int n_max);

// Nondimensional time and frequency spreads and the Heisenberg area.
// The time spread requires 2 beta > 1.
struct Concentration {
    double sigma_t;
    double sigma_omega;
    double area;
};
Concentration concentration(const MorseParams& p);

// Admissibility constant a^2 Gamma(2 beta/gamma) / (pi gamma 2^(2 beta/gamma + 1)),
// equal to (1/2pi) integral of |Psi|^2/omega.
double admissibility(const MorseParams& p);

// Radius of convergence of the time-domain Taylor series: 1 for gamma == 1,
// infinite for gamma > 1, undefined below.
double convergence_radius(const MorseParams& p);

// Taylor partial sum psi(t) ~ sum_{n<=n_terms} (it)^n M_n / n!.
std::complex<double> time_series_partial_sum(const MorseParams& p, double t, int n_terms);

// Invert duration and demodulate skewness: gamma = skew * P + 3, beta = P^2/gamma.
MorseParams params_from_duration_skewness(double duration, double skewness_imag);

// Every scalar the family exposes, bundled for reporting.
struct PropertyReport {
    double peak_frequency = 0.0;
    double energy_frequency = 0.0;
    double central_frequency = 0.0;
    double duration = 0.0;
    double skewness_imag = 0.0;
    double kurtosis = 0.0;
    double curvature = 0.0;
    double sigma_t = 0.0;
    double sigma_omega = 0.0;
    double heisenberg_area = 0.0;
    double admissibility = 0.0;
};
PropertyReport property_report(const MorseParams& p);

}  // namespace morsekit
