#include "morsekit/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "morsekit/quadrature.hpp"

namespace morsekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// exp(-u^3/3) drops below 1e-19 of its u=0 value past this point.
constexpr double kScorerCutoff = 5.2;

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

double gamma_ratio(double x, double n, double r) {
    if (!(x > 0.0) || !(x + n * r > 0.0) || !(x + r > 0.0))
        throw std::domain_error("gamma_ratio: gamma arguments must be positive");
    return std::exp(log_gamma(x + n * r) - log_gamma(x + r) - (n - 1.0) * r * std::log(x));
}

double dawson(double t) {
    const double x = std::fabs(t);
    const double sign = t < 0.0 ? -1.0 : 1.0;
    if (x < 1.0) {
        // D(t) = t * sum_k (-2 t^2)^k / (2k+1)!!
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 64; ++k) {
            term *= -2.0 * x * x / (2.0 * k + 1.0);
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
        }
        return sign * x * sum;
    }
    // Exchange-sum form: D(x) = (1/sqrt(pi)) sum over odd n of exp(-(x-nh)^2)/n.
    // Discretization error is O(exp(-pi^2/(4h^2))), far below double precision.
    const double h = 0.2;
    const double reach = 6.5;  // exp(-6.5^2) ~ 4e-19
    long n_lo = static_cast<long>(std::ceil((x - reach) / h));
    long n_hi = static_cast<long>(std::floor((x + reach) / h));
    if (n_lo % 2 == 0) ++n_lo;
    double sum = 0.0;
    for (long n = n_lo; n <= n_hi; n += 2) {
        const double d = x - n * h;
        sum += std::exp(-d * d) / n;
    }
    return sign * sum / std::sqrt(kPi);
}

double hermite(int n, double x) {
    if (n < 0 || n > 64) throw std::invalid_argument("hermite: order must be in [0, 64]");
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double hn = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hn;
    }
    return h;
}

double dawson_derivative(int n, double t) {
    if (n < 0 || n > 30) throw std::invalid_argument("dawson_derivative: order must be in [0, 30]");
    if (n == 0) return dawson(t);
    const double x2 = t * t;
    if (x2 >= std::max(40.0, 0.5 * (n + 1.0) * (n + 2.0))) {
        // Termwise derivative of D(x) ~ sum_m (2m-1)!!/(2^{m+1} x^{2m+1}).
        // Every term is positive, so there is no cancellation; terms fall
        // below machine precision well before the asymptotic turnaround.
        const double ax = std::fabs(t);
        double term = 0.5 * std::tgamma(n + 1.0) / std::pow(ax, n + 1.0);
        double sum = term;
        for (int m = 0; m < 4000; ++m) {
            const double next = term * (2.0 * m + n + 1.0) * (2.0 * m + n + 2.0)
                                / (2.0 * (2.0 * m + 2.0) * x2);
            if (next >= term) break;
            term = next;
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        double value = (n % 2 == 0) ? sum : -sum;
        if (t < 0.0 && n % 2 == 0) value = -value;
        return value;
    }
    const double d = dawson(t);
    // G_m(t) = i^m H_m(i t) is real: G_{m+1} = -2 t G_m + 2 m G_{m-1}.
    std::vector<double> g(n);
    g[0] = 1.0;
    if (n > 1) g[1] = -2.0 * t;
    for (int m = 2; m < n; ++m) g[m] = -2.0 * t * g[m - 1] + 2.0 * (m - 1) * g[m - 2];
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += binomial(n, k) * hermite(n - k, t) * g[k - 1];
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    return parity * (hermite(n, t) * d - sum);
}

double binomial(int n, int k) {
    if (n < 0 || n > 64 || k < 0 || k > n)
        throw std::invalid_argument("binomial: need 0 <= k <= n <= 64");
    static const auto table = [] {
        std::vector<std::vector<unsigned long long>> c(65);
        for (int i = 0; i <= 64; ++i) {
            c[i].resize(i + 1, 1ULL);
            for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
        return c;
    }();
    return static_cast<double>(table[n][k]);
}

std::complex<double> complete_bell(const BellCoefficients& c) {
    const int n = static_cast<int>(c.values.size());
    if (n < 1 || n > 20) throw std::invalid_argument("complete_bell: order must be in [1, 20]");
    std::vector<std::complex<double>> b(n + 1);
    b[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        std::complex<double> acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += binomial(m - 1, k - 1) * c.values[k - 1] * b[m - k];
        b[m] = acc;
    }
    return b[n];
}

std::complex<double> scorer_hi_imag(double y) {
    if (!(std::fabs(y) <= 64.0)) throw std::domain_error("scorer_hi_imag: |y| must be <= 64");
    auto f = [y](double u) {
        const double env = std::exp(-u * u * u / 3.0);
        return std::complex<double>(env * std::cos(y * u), env * std::sin(y * u));
    };
    return integrate(f, 0.0, kScorerCutoff, 1e-13) / kPi;
}

std::vector<std::complex<double>> scorer_hi_imag_derivatives(double y, int n_max) {
    if (n_max < 0 || n_max > 12)
        throw std::invalid_argument("scorer_hi_imag_derivatives: order must be in [0, 12]");
    std::vector<std::complex<double>> h(n_max + 1);
    h[0] = scorer_hi_imag(y);
    if (n_max >= 1) {
        auto f = [y](double u) {
            const double env = u * std::exp(-u * u * u / 3.0);
            return std::complex<double>(env * std::cos(y * u), env * std::sin(y * u));
        };
        h[1] = integrate(f, 0.0, kScorerCutoff, 1e-13) / kPi;
    }
    const std::complex<double> z(0.0, y);
    if (n_max >= 2) h[2] = z * h[0] + 1.0 / kPi;
    for (int k = 3; k <= n_max; ++k) h[k] = z * h[k - 2] + static_cast<double>(k - 2) * h[k - 3];
    return h;
}

}  // namespace morsekit
