#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace morsekit {

// Plan-cached 1-d complex DFTs. Plans are created once per (size, direction)
// under a lock; execution on caller-owned buffers is lock-free and safe from
// concurrent threads. `in` and `out` must be distinct buffers of length n.
void dft(const std::complex<double>* in, std::complex<double>* out, std::size_t n, int sign);

// Unnormalized forward transform: X_k = sum_n x_n exp(-2 pi i k n / N).
std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& x);

// Inverse transform with 1/N normalization, exact inverse of fft_forward.
std::vector<std::complex<double>> fft_inverse(const std::vector<std::complex<double>>& x);

// FFT bin frequencies in radians for sample spacing dt: bin k maps to
// 2 pi k / (n dt) for k <= n/2 and the negative alias above.
std::vector<double> fft_frequencies(std::size_t n, double dt);

}  // namespace morsekit
