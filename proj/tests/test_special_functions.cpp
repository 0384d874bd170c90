#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "morsekit/special_functions.hpp"
#include "oracles.hpp"

using namespace morsekit;
using std::complex;

TEST_CASE("log_gamma recursion and reflection") {
    // Gamma(x+1) = x Gamma(x) across the supported range.
    for (double x = 0.05; x < 169.0; x *= 1.17) {
        const double lhs = log_gamma(x + 1.0);
        const double rhs = log_gamma(x) + std::log(x);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
    }
    // Gamma(x) Gamma(1-x) = pi / sin(pi x) on (0, 1).
    for (double x = 0.05; x < 1.0; x += 0.09) {
        const double lhs = log_gamma(x) + log_gamma(1.0 - x);
        const double rhs = std::log(oracle::kPi / std::sin(oracle::kPi * x));
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
    }
    CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470008).epsilon(1e-14));
    CHECK(log_gamma(10.0) == doctest::Approx(12.801827480081469).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
}

TEST_CASE("gamma_ratio approaches one and is exact at n = 1") {
    CHECK(gamma_ratio(7.3, 1.0, 0.25) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_ratio(10.0, 2.0, 1.0 / 3.0) ==
          doctest::Approx(1.0001232596803522).epsilon(1e-12));
    double prev = 1.0;
    for (double x : {10.0, 100.0, 1000.0, 10000.0}) {
        const double dev = std::fabs(gamma_ratio(x, 3.0, 1.0 / 3.0) - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 5e-5);
    CHECK_THROWS_AS(gamma_ratio(-1.0, 2.0, 0.5), std::domain_error);
}

TEST_CASE("dawson against quadrature oracle") {
    CHECK(dawson(1.0) == doctest::Approx(0.53807950691276840).epsilon(1e-13));
    CHECK(dawson(0.5) == doctest::Approx(0.42443638350202229).epsilon(1e-13));
    CHECK(dawson(4.0) == doctest::Approx(0.12934800123600509).epsilon(1e-12));
    CHECK(dawson(15.0) == doctest::Approx(0.033407906808639254).epsilon(1e-12));
    for (double t = 0.05; t <= 15.0; t += 0.193) {
        CHECK(std::fabs(dawson(t) - oracle::dawson_quadrature(t)) < 5e-13);
        CHECK(dawson(-t) == -dawson(t));  // odd by construction
    }
    CHECK(dawson(0.0) == 0.0);
}

TEST_CASE("dawson satisfies its differential equation") {
    // D'(t) = 1 - 2 t D(t); derivative estimated by the O(h^4) stencil.
    for (double t = -14.5; t <= 14.5; t += 0.37) {
        const double lhs = oracle::fd_derivative([](double u) { return dawson(u); }, 1, t, 4e-3);
        const double rhs = 1.0 - 2.0 * t * dawson(t);
        CHECK(std::fabs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("dawson_derivative closed form against finite differences") {
    CHECK(dawson_derivative(1, 0.0) == 1.0);
    CHECK(dawson_derivative(0, 0.7) == dawson(0.7));
    // Frozen from the exact polynomial-pair recursion (oracles.hpp).
    CHECK(dawson_derivative(2, 1.2) == doctest::Approx(-0.49265165350689855).epsilon(1e-12));
    CHECK(dawson_derivative(3, 0.7) == doctest::Approx(0.84741094955501461).epsilon(1e-12));
    for (double t : {-2.3, -0.8, 0.4, 1.2, 3.1}) {
        for (int n = 2; n <= 12; ++n) {
            const double exact = oracle::dawson_derivative_polypair(n, t, dawson(t));
            // Both routes sum alternating-sign polynomials of size (2|t|)^n, so the
            // attainable agreement degrades with n at the largest sample points.
            const double tol = (n <= 6 || std::fabs(t) < 3.0) ? 1e-10 : 5e-8;
            CHECK(dawson_derivative(n, t) == doctest::Approx(exact).epsilon(tol));
        }
    }
    for (double t : {-2.8, -1.1, 0.0, 0.3, 1.2, 2.9}) {
        // D' must match 1 - 2 t D to machine accuracy.
        CHECK(std::fabs(dawson_derivative(1, t) - (1.0 - 2.0 * t * dawson(t))) < 1e-13);
        for (int n = 2; n <= 5; ++n) {
            const double fd =
                oracle::fd_derivative([n](double u) { return dawson_derivative(n - 1, u); }, 1, t,
                                      5e-3);
            CHECK(dawson_derivative(n, t) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    CHECK_THROWS_AS(dawson_derivative(31, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(dawson_derivative(-1, 0.0), std::invalid_argument);
}

TEST_CASE("dawson_derivative at large arguments against the Fourier oracle") {
    // The closed form cancels catastrophically once |t| is large; the
    // large-argument series branch must agree with direct quadrature of the
    // Fourier representation.  Oracle noise, not the series, sets the floor
    // at the largest order/argument pairs.
    for (int n = 1; n <= 6; ++n) {
        for (double x : {6.5, 15.0, 30.0}) {
            const double orc = oracle::dawson_derivative_fourier(n, x);
            const double tol = n <= 4 ? 1e-8 : 1e-6;
            CHECK(dawson_derivative(n, x) == doctest::Approx(orc).epsilon(tol));
        }
    }
    // Straddle the series/closed-form switchover for n = 4 (at t^2 = 40).
    CHECK(dawson_derivative(4, 6.31) ==
          doctest::Approx(oracle::dawson_derivative_fourier(4, 6.31)).epsilon(1e-7));
    CHECK(dawson_derivative(4, 6.34) ==
          doctest::Approx(oracle::dawson_derivative_fourier(4, 6.34)).epsilon(1e-7));
    // D is odd, so its n-th derivative has parity (-1)^(n+1).
    CHECK(dawson_derivative(3, -12.0) == doctest::Approx(dawson_derivative(3, 12.0)).epsilon(1e-13));
    CHECK(dawson_derivative(4, -12.0) ==
          doctest::Approx(-dawson_derivative(4, 12.0)).epsilon(1e-13));
    CHECK(dawson_derivative(3, -12.0) ==
          doctest::Approx(oracle::dawson_derivative_fourier(3, -12.0)).epsilon(1e-9));
}

TEST_CASE("hermite polynomials") {
    CHECK(hermite(0, 3.7) == 1.0);
    CHECK(hermite(4, 0.0) == 12.0);
    CHECK(hermite(5, 0.0) == 0.0);
    for (int n = 1; n <= 12; ++n)
        for (double x = -3.0; x <= 3.0; x += 0.61) {
            const double ref = oracle::hermite_sum(n, x);
            CHECK(hermite(n, x) ==
                  doctest::Approx(ref).epsilon(1e-10).scale(std::max(1.0, std::fabs(ref))));
        }
    CHECK(std::isfinite(hermite(64, 14.9)));
    CHECK_THROWS_AS(hermite(65, 0.0), std::invalid_argument);
}

TEST_CASE("binomial coefficients are exact") {
    CHECK(binomial(0, 0) == 1.0);
    CHECK(binomial(20, 10) == 184756.0);
    CHECK(binomial(64, 32) == 1832624140942590534.0);
    CHECK_THROWS_AS(binomial(65, 1), std::invalid_argument);
    CHECK_THROWS_AS(binomial(5, 6), std::invalid_argument);
}

TEST_CASE("complete Bell polynomial: Bell numbers and enumeration oracle") {
    const double expected[] = {1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 1; n <= 10; ++n) {
        BellCoefficients ones{std::vector<complex<double>>(n, 1.0)};
        CHECK(complete_bell(ones).real() == doctest::Approx(expected[n - 1]).epsilon(1e-13));
        CHECK(complete_bell(ones).imag() == 0.0);
        CHECK(oracle::bell_number(n) == expected[n - 1]);
    }
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 8;
        std::vector<complex<double>> c(n);
        for (auto& v : c) v = complex<double>(u(rng), u(rng));
        const auto ref = oracle::bell_enumerated(c);
        const auto got = complete_bell({c});
        CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
    CHECK_THROWS_AS(complete_bell({std::vector<complex<double>>(21, 1.0)}),
                    std::invalid_argument);
}

TEST_CASE("scorer function on the imaginary axis") {
    const auto hi0 = scorer_hi_imag(0.0);
    CHECK(hi0.real() == doctest::Approx(0.40995108496400051).epsilon(1e-10));
    CHECK(std::fabs(hi0.imag()) < 1e-14);
    const auto hi2 = scorer_hi_imag(2.0);
    CHECK(hi2.real() == doctest::Approx(0.056556892927887174).epsilon(1e-9));
    CHECK(hi2.imag() == doctest::Approx(0.24372526545866732).epsilon(1e-9));
    for (double y = -8.0; y <= 8.0; y += 1.7) {
        const auto ref = oracle::scorer_quadrature(y);
        CHECK(std::abs(scorer_hi_imag(y) - ref) < 1e-10);
    }
    CHECK_THROWS_AS(scorer_hi_imag(65.0), std::domain_error);
}

TEST_CASE("scorer derivatives satisfy the inhomogeneous Airy equation") {
    for (double y : {-5.0, -1.3, 0.0, 0.4, 2.0, 7.0}) {
        const auto h = scorer_hi_imag_derivatives(y, 6);
        const complex<double> z(0.0, y);
        // Hi'' = z Hi + 1/pi, and each higher derivative follows the recurrence.
        CHECK(std::abs(h[2] - (z * h[0] + 1.0 / oracle::kPi)) < 1e-14);
        // Hi' against the first-moment quadrature oracle.
        CHECK(std::abs(h[1] - oracle::scorer_quadrature(y, 1)) < 1e-10);
        // d/dy Hi(iy) = i Hi'(iy): check with the O(h^4) stencil along y.
        const double hs = 1e-2;
        complex<double> fd = 0.0;
        const int w[5] = {1, -8, 0, 8, -1};
        for (int k = -2; k <= 2; ++k)
            fd += static_cast<double>(w[k + 2]) * scorer_hi_imag(y + k * hs);
        fd /= 12.0 * hs;
        CHECK(std::abs(fd - complex<double>(0.0, 1.0) * h[1]) < 1e-8);
    }
    CHECK(scorer_hi_imag_derivatives(1.0, 1).size() == 2);
    CHECK_THROWS_AS(scorer_hi_imag_derivatives(0.0, 13), std::invalid_argument);
}

TEST_CASE("scorer derivative value from quadrature") {
    const auto h = scorer_hi_imag_derivatives(1.0, 1);
    CHECK(h[1].real() == doctest::Approx(0.12979229042770105).epsilon(1e-9));
    CHECK(h[1].imag() == doctest::Approx(0.23128157334529595).epsilon(1e-9));
}
