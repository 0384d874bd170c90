// Timing comparison of the serial reference engines against the parallel
// ones, on transform and distribution workloads sized like real analyses.
// The parallel results must be bit-identical to the serial references, so
// the benchmark doubles as a large-input equivalence check.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "morsekit/closed_forms.hpp"
#include "morsekit/morse.hpp"
#include "morsekit/threading.hpp"
#include "morsekit/timefreq.hpp"
#include "morsekit/transform.hpp"
#include "morsekit/wavelet.hpp"

namespace {

using namespace morsekit;

double time_of(const std::function<void()>& body, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() /
           reps;
}

std::vector<double> grid01(double hi, std::size_t m) {
    std::vector<double> g(m);
    for (std::size_t i = 0; i < m; ++i)
        g[i] = hi * static_cast<double>(i) / static_cast<double>(m - 1);
    return g;
}

}  // namespace

int main() {
    std::printf("workers: %d\n\n", worker_count());

    {
        const std::size_t n = 1 << 15;
        const double dt = 0.05;
        std::mt19937_64 rng(1234);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<std::complex<double>> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = gauss(rng) + std::sin(0.7 * i * dt);

        const MorseWavelet w({3.0, 3.0});
        const ScaleGrid grid =
            make_scale_grid(w, FrequencyConvention::peak, 0.05, 30.0, 24.0);
        std::printf("cwt: %zu samples x %zu scales\n", n, grid.scales.size());

        Scalogram serial, parallel;
        const double ts = time_of(
            [&] { serial = cwt_serial(x, dt, w, grid, BoundaryPolicy::periodic); }, 3);
        const double tp =
            time_of([&] { parallel = cwt(x, dt, w, grid, BoundaryPolicy::periodic); }, 3);
        bool identical = serial.coefficients.size() == parallel.coefficients.size();
        for (std::size_t i = 0; identical && i < serial.coefficients.size(); ++i)
            identical = serial.coefficients[i] == parallel.coefficients[i];
        std::printf("  serial   %8.1f ms\n", ts * 1e3);
        std::printf("  parallel %8.1f ms  speedup %.2fx  bit-identical %s\n\n", tp * 1e3,
                    ts / tp, identical ? "yes" : "NO");
    }

    {
        const MorseParams p{4.0, 3.0};
        double wmax = 2.0 * peak_frequency(p);
        while (spectrum_value(p, wmax) > 4e-16) wmax *= 1.25;
        const SampledWavelet sw =
            spectral_inverse(evaluate_spectrum(p, grid01(wmax, 4097)), 1537);
        std::printf("wigner_ville: %zu time samples, oversample 2\n", sw.t.size());

        WignerVille serial, parallel;
        const double ts = time_of([&] { serial = wigner_ville_serial(sw, 2); }, 3);
        const double tp = time_of([&] { parallel = wigner_ville(sw, 2); }, 3);
        bool identical = serial.values.size() == parallel.values.size();
        for (std::size_t i = 0; identical && i < serial.values.size(); ++i)
            identical = serial.values[i] == parallel.values[i];
        std::printf("  serial   %8.1f ms\n", ts * 1e3);
        std::printf("  parallel %8.1f ms  speedup %.2fx  bit-identical %s\n", tp * 1e3,
                    ts / tp, identical ? "yes" : "NO");
    }
    return 0;
}
