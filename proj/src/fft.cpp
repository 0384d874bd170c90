#include "morsekit/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace morsekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// FFTW planning is not thread-safe; execution through fftw_execute_dft on
// distinct buffers is. Plans are kept for the process lifetime.
fftw_plan plan_for(std::size_t n, int sign) {
    static std::mutex plan_mutex;
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    const auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> a(n), b(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                   reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fft: plan creation failed");
    cache.emplace(key, p);
    return p;
}

}  // namespace

void dft(const std::complex<double>* in, std::complex<double>* out, std::size_t n, int sign) {
    if (n == 0) throw std::invalid_argument("dft: empty input");
    if (sign != 1 && sign != -1) throw std::invalid_argument("dft: sign must be +1 or -1");
    fftw_plan p = plan_for(n, sign == -1 ? FFTW_FORWARD : FFTW_BACKWARD);
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& x) {
    std::vector<std::complex<double>> out(x.size());
    dft(x.data(), out.data(), x.size(), -1);
    return out;
}

std::vector<std::complex<double>> fft_inverse(const std::vector<std::complex<double>>& x) {
    std::vector<std::complex<double>> out(x.size());
    dft(x.data(), out.data(), x.size(), 1);
    const double inv = 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= inv;
    return out;
}

std::vector<double> fft_frequencies(std::size_t n, double dt) {
    if (n == 0) throw std::invalid_argument("fft_frequencies: empty grid");
    if (!(dt > 0.0)) throw std::invalid_argument("fft_frequencies: dt must be positive");
    std::vector<double> w(n);
    const double step = 2.0 * kPi / (static_cast<double>(n) * dt);
    const std::size_t half = n / 2;  // bins above n/2 alias to negative frequencies
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = (k <= half) ? static_cast<double>(k)
                                      : static_cast<double>(k) - static_cast<double>(n);
        w[k] = step * kk;
    }
    return w;
}

}  // namespace morsekit
