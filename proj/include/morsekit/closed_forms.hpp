#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "morsekit/morse.hpp"
#include "morsekit/sampling.hpp"

namespace morsekit {

// Uniform grid of n (odd) samples spaced dt, symmetric about t = 0.
std::vector<double> symmetric_time_grid(std::size_t n, double dt);

// gamma = 1 family: psi(t) = (e/beta)^beta (1/pi) Gamma(beta+1) / (1-it)^(beta+1),
// principal branch; beta = 0 gives 1/(pi (1 - it)).
SampledWavelet cauchy_time(double beta, const std::vector<double>& t);

// gamma = 2 family, integer beta <= 30: real part Hermite x Gaussian, imaginary
// part from Dawson-function derivatives.
SampledWavelet gaussian_family_time(int beta, const std::vector<double>& t);

// gamma = 3 family, integer beta <= 10, from derivatives of the second Scorer
// function at imaginary argument.
SampledWavelet airy_time(int beta, const std::vector<double>& t);

// Analytic part of a real signal: spectrum 2 U(omega) X(omega) with weight 1
// at the DC and Nyquist bins. The complex overload acts on the real part,
// which makes the operator idempotent on already-analytic inputs.
std::vector<std::complex<double>> analytic_filter_apply(const std::vector<double>& x);
std::vector<std::complex<double>> analytic_filter_apply(
    const std::vector<std::complex<double>>& x);

// Inverse transform of a sampled spectrum onto a centered time grid.
// Accepts either a one-sided grid (uniform from 0; negative frequencies
// implicitly zero; full length becomes 2M-1) or a full FFT-ordered grid of
// odd length that includes negative frequencies. n_time = 0 returns all
// samples, otherwise the central n_time (odd) samples.
SampledWavelet spectral_inverse(const SpectralWavelet& w, std::size_t n_time = 0);

// Large-|t| tail a Gamma(beta+1) e^{i pi (beta+1)/2} / (2 pi t^(beta+1)),
// conjugated for t < 0. Meaningful once |t| omega_peak > 20 or so.
std::complex<double> decay_envelope(const MorseParams& p, double t);

// Ratios (M_n/M_0)/omega_peak^n for n = 0..n_max; all approach 1 as beta grows.
std::vector<double> sinusoid_limit_check(const MorseParams& p, int n_max);

}  // namespace morsekit
