#pragma once

#include <complex>
#include <vector>

namespace morsekit {

// Natural log of the gamma function, x > 0.
double log_gamma(double x);

// Gamma(x + n r) / (Gamma(x + r) x^((n-1) r)), evaluated in log space.
// Approaches 1 as x grows with n, r fixed.
double gamma_ratio(double x, double n, double r);

// Dawson integral D(t) = exp(-t^2) * integral_0^t exp(u^2) du.
// Maclaurin series for small |t|, exchange-sum evaluation elsewhere;
// absolute accuracy ~1e-15 on |t| <= 15.
double dawson(double t);

// n-th derivative of the Dawson integral via the closed Hermite-pair form,
// 0 <= n <= 30.  Subject to cancellation for large n together with large |t|.
double dawson_derivative(int n, double t);

// Physicists' Hermite polynomial H_n(x), 0 <= n <= 64.
double hermite(int n, double x);

// Exact binomial coefficient as a double, 0 <= k <= n <= 64.
double binomial(int n, int k);

// Argument sequence c_1..c_n for the complete Bell polynomial.
struct BellCoefficients {
    std::vector<std::complex<double>> values;  // values[k-1] holds c_k
};

// Complete Bell polynomial B_n(c_1,...,c_n), n = values.size() <= 20.
// B_n(1,...,1) gives the Bell numbers 1, 2, 5, 15, 52, ...
std::complex<double> complete_bell(const BellCoefficients& c);

// Scorer function Hi(z) on the imaginary axis, z = iy with |y| <= 64,
// by adaptive quadrature of (1/pi) integral_0^inf exp(-u^3/3) exp(iyu) du.
std::complex<double> scorer_hi_imag(double y);

// d^k/dz^k Hi(z) at z = iy for k = 0..n_max (n_max <= 12).  The first two
// come from quadrature, the rest from Hi''(z) = z Hi(z) + 1/pi.
std::vector<std::complex<double>> scorer_hi_imag_derivatives(double y, int n_max);

}  // namespace morsekit
