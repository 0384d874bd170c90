// Command-line front end: property reports, wavelet sampling, transforms, and
// demo dataset generation. Exit codes: 0 ok, 2 parameter error, 3 I/O error,
// 4 numerical failure. All numeric output uses shortest round-trip decimals
// so identical flags produce byte-identical files.
#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsekit/closed_forms.hpp"
#include "morsekit/morlet.hpp"
#include "morsekit/morse.hpp"
#include "morsekit/sampling.hpp"
#include "morsekit/timefreq.hpp"
#include "morsekit/transform.hpp"
#include "morsekit/wavelet.hpp"

namespace {

using namespace morsekit;
using C = std::complex<double>;

constexpr int kSchemaVersion = 1;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal that round-trips to the same double; JSON-safe variant
// spells non-finite values as null.
std::string fmt(double v) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

std::string fmt12(double v) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, r.ptr);
}

std::string json_number(const std::string& digits) {
    if (digits.find("nan") != std::string::npos || digits.find("inf") != std::string::npos)
        return "null";
    return digits;
}

std::string json_array(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += json_number(fmt(v[i]));
    }
    return out + "]";
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open output file: " + path);
    f << body;
    if (!f) throw io_error("failed writing output file: " + path);
}

void write_or_print(const std::string& path, const std::string& body) {
    if (path.empty())
        std::cout << body;
    else
        write_text(path, body);
}

std::string csv_matrix(const std::vector<C>& values, std::size_t rows, std::size_t cols,
                       bool imag_part) {
    std::string out;
    out.reserve(values.size() * 12);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) out += ",";
            const C v = values[r * cols + c];
            out += fmt(imag_part ? v.imag() : v.real());
        }
        out += "\n";
    }
    return out;
}

// --- wavelet construction helpers ---

struct FamilyChoice {
    bool is_morse = false;
    MorseParams morse;
    double carrier = 0.0;
};

FamilyChoice family_from_flags(double beta, double gamma, double nu) {
    const bool have_morse = beta > 0.0 || gamma > 0.0;
    const bool have_morlet = nu > 0.0;
    if (have_morse == have_morlet)
        throw std::invalid_argument("specify either --beta/--gamma or --morlet-nu");
    FamilyChoice f;
    if (have_morse) {
        if (!(beta > 0.0) || !(gamma > 0.0))
            throw std::invalid_argument("--beta and --gamma must both be positive");
        f.is_morse = true;
        f.morse = {beta, gamma};
    } else {
        f.carrier = nu;
    }
    return f;
}

double family_spectrum(const FamilyChoice& f, double omega) {
    return f.is_morse ? spectrum_value(f.morse, omega)
                      : morlet_spectrum_value({f.carrier}, omega);
}

double family_peak(const FamilyChoice& f) {
    return f.is_morse ? peak_frequency(f.morse) : peak_from_carrier(f.carrier).peak_frequency;
}

// Smallest grid top (geometric search) beyond which the transfer function is
// numerically zero relative to its peak amplitude of 2.
double auto_wmax(const FamilyChoice& f) {
    double w = 2.0 * family_peak(f);
    while (std::fabs(family_spectrum(f, w)) > 4e-16) w *= 1.25;
    return w;
}

std::vector<double> linspace0(double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = hi * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

// Wavelet spec string for the transform command: morse:beta,gamma | morlet:nu.
FamilyChoice parse_wavelet_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto parse_double = [&](const std::string& s) {
        double v = 0.0;
        const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (r.ec != std::errc() || r.ptr != s.data() + s.size())
            throw std::invalid_argument("bad number in --wavelet spec: " + spec);
        return v;
    };
    if (head == "morse") {
        const auto comma = tail.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--wavelet morse spec needs beta,gamma");
        return family_from_flags(parse_double(tail.substr(0, comma)),
                                 parse_double(tail.substr(comma + 1)), 0.0);
    }
    if (head == "morlet") return family_from_flags(0.0, 0.0, parse_double(tail));
    throw std::invalid_argument("--wavelet must be morse:beta,gamma or morlet:nu");
}

// Carrier whose demodulate duration matches the target, by bisection on the
// strictly increasing morlet_duration curve.
double carrier_for_duration(double target) {
    double lo = 0.05, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (morlet_duration(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// --- props ---

int cmd_props(double beta, double gamma, double duration, double skewness, double nu,
              const std::string& format, const std::string& output) {
    std::vector<std::pair<std::string, double>> rows;
    if (nu > 0.0) {
        if (beta > 0.0 || gamma > 0.0 || duration > 0.0)
            throw std::invalid_argument("--morlet-nu excludes the Morse parameter flags");
        const PropertyReport r = morlet_property_report({nu});
        rows.emplace_back("carrier", nu);
        rows.emplace_back("peak_frequency", r.peak_frequency);
        rows.emplace_back("energy_frequency", r.energy_frequency);
        rows.emplace_back("central_frequency", r.central_frequency);
        rows.emplace_back("duration", r.duration);
        rows.emplace_back("skewness_imag", r.skewness_imag);
        rows.emplace_back("kurtosis", r.kurtosis);
        rows.emplace_back("curvature", r.curvature);
        rows.emplace_back("sigma_t", r.sigma_t);
        rows.emplace_back("sigma_omega", r.sigma_omega);
        rows.emplace_back("heisenberg_area", r.heisenberg_area);
        rows.emplace_back("admissibility", r.admissibility);
    } else {
        MorseParams p;
        if (duration > 0.0) {
            if (beta > 0.0 || gamma > 0.0)
                throw std::invalid_argument(
                    "--duration/--skewness exclude the --beta/--gamma flags");
            p = params_from_duration_skewness(duration, skewness);
        } else {
            if (!(beta > 0.0) || !(gamma > 0.0))
                throw std::invalid_argument(
                    "provide --beta with --gamma, --duration with --skewness, or --morlet-nu");
            p = {beta, gamma};
        }
        const PropertyReport r = property_report(p);
        rows.emplace_back("beta", p.beta);
        rows.emplace_back("gamma", p.gamma);
        rows.emplace_back("peak_frequency", r.peak_frequency);
        rows.emplace_back("energy_frequency", r.energy_frequency);
        rows.emplace_back("central_frequency", r.central_frequency);
        rows.emplace_back("duration", r.duration);
        rows.emplace_back("skewness_imag", r.skewness_imag);
        rows.emplace_back("kurtosis", r.kurtosis);
        rows.emplace_back("curvature", r.curvature);
        rows.emplace_back("sigma_t", r.sigma_t);
        rows.emplace_back("sigma_omega", r.sigma_omega);
        rows.emplace_back("heisenberg_area", r.heisenberg_area);
        rows.emplace_back("admissibility", r.admissibility);
    }

    std::string body;
    if (format == "csv") {
        body = "name,value\n";
        for (const auto& [k, v] : rows) body += k + "," + fmt12(v) + "\n";
    } else if (format == "json") {
        body = "{\n  \"schema_version\": " + std::to_string(kSchemaVersion);
        body += ",\n  \"family\": \"" + std::string(nu > 0.0 ? "morlet" : "morse") + "\"";
        for (const auto& [k, v] : rows)
            body += ",\n  \"" + k + "\": " + json_number(fmt12(v));
        body += "\n}\n";
    } else {
        throw std::invalid_argument("--format must be json or csv");
    }
    write_or_print(output, body);
    return 0;
}

// --- wavelet ---

int cmd_wavelet(double beta, double gamma, double nu, std::size_t points,
                const std::string& domain, const std::string& method,
                const std::string& output) {
    const FamilyChoice fam = family_from_flags(beta, gamma, nu);
    if (points < 8 || points > (1u << 22))
        throw std::invalid_argument("--points must lie in [8, 4194304]");
    const double wmax = auto_wmax(fam);

    std::string body;
    if (domain == "freq") {
        const std::vector<double> grid = linspace0(wmax, points);
        body = "omega,real,imag,abs\n";
        for (double w : grid) {
            const double v = family_spectrum(fam, w);
            body += fmt(w) + "," + fmt(v) + ",0," + fmt(std::fabs(v)) + "\n";
        }
    } else if (domain == "time") {
        SampledWavelet sw;
        if (method == "spectral") {
            if ((points & (points - 1)) != 0)
                throw std::invalid_argument("--points must be a power of two for --method spectral");
            const std::vector<double> grid = linspace0(wmax, points);
            const SpectralWavelet spec =
                fam.is_morse ? evaluate_spectrum(fam.morse, grid)
                             : morlet_spectrum({fam.carrier}, grid);
            sw = spectral_inverse(spec);
        } else if (method == "closed") {
            // Same grid the spectral route would produce, so the two methods
            // emit directly comparable files.
            const double dw = wmax / static_cast<double>(points - 1);
            const std::size_t n = 2 * points - 1;
            const double dt = 2.0 * std::numbers::pi / (static_cast<double>(n) * dw);
            const std::vector<double> t = symmetric_time_grid(n, dt);
            if (!fam.is_morse) {
                sw = morlet_time({fam.carrier}, t);
            } else if (fam.morse.gamma == 1.0) {
                sw = cauchy_time(fam.morse.beta, t);
            } else if (fam.morse.gamma == 2.0 || fam.morse.gamma == 3.0) {
                if (fam.morse.beta != std::floor(fam.morse.beta))
                    throw std::invalid_argument(
                        "closed form needs an integer --beta for gamma = 2 or 3");
                const int b = static_cast<int>(fam.morse.beta);
                sw = fam.morse.gamma == 2.0 ? gaussian_family_time(b, t) : airy_time(b, t);
            } else {
                throw std::invalid_argument(
                    "no closed form for gamma = " + fmt(fam.morse.gamma) +
                    "; use --method spectral");
            }
        } else {
            throw std::invalid_argument("--method must be spectral or closed");
        }
        body = "t,real,imag,abs\n";
        for (std::size_t i = 0; i < sw.t.size(); ++i)
            body += fmt(sw.t[i]) + "," + fmt(sw.values[i].real()) + "," +
                    fmt(sw.values[i].imag()) + "," + fmt(std::abs(sw.values[i])) + "\n";
    } else {
        throw std::invalid_argument("--domain must be time or freq");
    }
    write_or_print(output, body);
    return 0;
}

// --- transform ---

struct InputSignal {
    std::vector<double> x;
    double dt = 1.0;
    bool timed = false;
};

InputSignal read_signal(const std::string& path, double dt_flag) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot read input file: " + path);
    InputSignal in;
    std::vector<double> t;
    std::string line;
    bool first = true;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line.find_first_not_of("0123456789+-.eE, \t") != std::string::npos) {
            first = false;  // header row
            continue;
        }
        first = false;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double a = 0.0, b = 0.0;
        if (!(ss >> a)) throw io_error("malformed numeric row in " + path + ": " + line);
        if (ss >> b) {
            t.push_back(a);
            in.x.push_back(b);
        } else {
            in.x.push_back(a);
        }
    }
    if (in.x.empty()) throw io_error("input file is empty: " + path);
    if (!t.empty()) {
        if (t.size() != in.x.size())
            throw io_error("inconsistent column count in " + path);
        in.timed = true;
        in.dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
        if (!(in.dt > 0.0))
            throw std::invalid_argument("input time column must be increasing");
        for (std::size_t i = 0; i < t.size(); ++i)
            if (std::fabs(t[i] - t.front() - static_cast<double>(i) * in.dt) > 1e-6 * in.dt)
                throw std::invalid_argument("input time grid must be uniform");
    } else {
        in.dt = dt_flag;
    }
    return in;
}

FrequencyConvention parse_convention(const std::string& s) {
    if (s == "peak") return FrequencyConvention::peak;
    if (s == "energy") return FrequencyConvention::energy;
    if (s == "instantaneous") return FrequencyConvention::instantaneous;
    throw std::invalid_argument("--convention must be peak, energy, or instantaneous");
}

BoundaryPolicy parse_boundary(const std::string& s) {
    if (s == "zero") return BoundaryPolicy::zero;
    if (s == "periodic") return BoundaryPolicy::periodic;
    if (s == "mirror") return BoundaryPolicy::mirror;
    throw std::invalid_argument("--boundary must be zero, periodic, or mirror");
}

int cmd_transform(const std::string& input, const std::string& wavelet_spec, double voices,
                  double min_freq, double max_freq, const std::string& convention,
                  const std::string& boundary, double dt_flag, const std::string& prefix) {
    const InputSignal in = read_signal(input, dt_flag);
    const FamilyChoice fam = parse_wavelet_spec(wavelet_spec);
    const FrequencyConvention conv = parse_convention(convention);
    const BoundaryPolicy bound = parse_boundary(boundary);

    std::unique_ptr<AnalyticWavelet> w;
    if (fam.is_morse)
        w = std::make_unique<MorseWavelet>(fam.morse);
    else
        w = std::make_unique<MorletWavelet>(fam.carrier);

    const ScaleGrid grid = make_scale_grid(*w, conv, min_freq, max_freq, voices);
    const Scalogram sg = cwt(in.x, in.dt, *w, grid, bound);

    const std::size_t ns = sg.scales.size(), nt = sg.times.size();
    write_text(prefix + "_real.csv", csv_matrix(sg.coefficients, ns, nt, false));
    write_text(prefix + "_imag.csv", csv_matrix(sg.coefficients, ns, nt, true));

    std::vector<double> freqs(ns);
    for (std::size_t k = 0; k < ns; ++k)
        freqs[k] = scale_to_frequency(*w, conv, sg.scales[k]);

    std::string js = "{\n  \"schema_version\": " + std::to_string(kSchemaVersion);
    js += ",\n  \"wavelet\": \"" + wavelet_spec + "\"";
    js += ",\n  \"convention\": \"" + convention + "\"";
    js += ",\n  \"boundary\": \"" + boundary + "\"";
    js += ",\n  \"voices\": " + json_number(fmt(voices));
    js += ",\n  \"dt\": " + json_number(fmt(in.dt));
    js += ",\n  \"n_scales\": " + std::to_string(ns);
    js += ",\n  \"n_times\": " + std::to_string(nt);
    js += ",\n  \"layout\": \"rows are scales, columns are times\"";
    js += ",\n  \"times\": " + json_array(sg.times);
    js += ",\n  \"scales\": " + json_array(sg.scales);
    js += ",\n  \"frequencies\": " + json_array(freqs);
    js += "\n}\n";
    write_text(prefix + ".json", js);
    return 0;
}

// --- figure ---

struct Lattice {
    std::vector<double> p_over_pi;
    std::vector<double> skew;
};

// Lattice spec "p0:p1:np,s0:s1:ns" over duration P/pi and demodulate skewness.
Lattice parse_lattice(const std::string& spec) {
    auto parse_axis = [](const std::string& s) {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        const auto c1 = s.find(':');
        const auto c2 = s.find(':', c1 == std::string::npos ? s.size() : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("--lattice axis must be lo:hi:count");
        try {
            lo = std::stod(s.substr(0, c1));
            hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
            count = std::stoi(s.substr(c2 + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number in --lattice spec");
        }
        if (count < 1 || count > 4096 || (count > 1 && !(hi > lo)))
            throw std::invalid_argument("--lattice axis bounds must ascend with count in [1,4096]");
        std::vector<double> axis(count);
        for (int i = 0; i < count; ++i)
            axis[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                                 static_cast<double>(count - 1);
        return axis;
    };
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--lattice must be p0:p1:np,s0:s1:ns");
    Lattice l;
    l.p_over_pi = parse_axis(spec.substr(0, comma));
    l.skew = parse_axis(spec.substr(comma + 1));
    return l;
}

MorseParams lattice_point(double p_over_pi, double skew) {
    const double P = p_over_pi * std::numbers::pi;
    const double gamma = 3.0 + skew * P;
    if (!(gamma > 0.0))
        throw std::invalid_argument("invalid lattice point: skewness must exceed -3/P");
    return {P * P / gamma, gamma};
}

int cmd_figure_map(const Lattice& lat, bool area_map, const std::string& prefix) {
    std::string body = "P_over_pi,skew,beta,gamma,quantity,value\n";
    for (double pp : lat.p_over_pi)
        for (double sk : lat.skew) {
            const MorseParams p = lattice_point(pp, sk);
            const std::string head =
                fmt(pp) + "," + fmt(sk) + "," + fmt(p.beta) + "," + fmt(p.gamma) + ",";
            if (area_map) {
                body += head + "heisenberg_area," + fmt(concentration(p).area) + "\n";
            } else {
                const FrequencyMeasures m = frequency_measures(p);
                body += head + "energy_ratio_minus_one," + fmt(m.energy / m.peak - 1.0) + "\n";
                body += head + "central_ratio_minus_one," + fmt(m.central / m.peak - 1.0) + "\n";
                body += head + "curvature," + fmt(m.curvature) + "\n";
            }
        }
    write_text(prefix + ".csv", body);
    return 0;
}

int cmd_figure_chirp(const std::string& prefix) {
    // Gaussian-enveloped chirp sweeping through zero frequency, analyzed with
    // a duration-matched pair: the analytic Morse (1,3) wavelet against the
    // leaky Morlet at the same P = sqrt(3).
    const ChirpSignal ch = make_chirp(200.0, 0.1, 30.0, 2049);
    const double dt = ch.t[1] - ch.t[0];
    const double nu = carrier_for_duration(std::sqrt(3.0));
    const MorseWavelet wm({1, 3});
    const MorletWavelet wl(nu);
    const ScaleGrid gm = make_scale_grid(wm, FrequencyConvention::peak, 0.4, 6.0, 16);
    const ScaleGrid gl = make_scale_grid(wl, FrequencyConvention::peak, 0.4, 6.0, 16);
    const Scalogram sm = cwt(ch.x, dt, wm, gm, BoundaryPolicy::zero);
    const Scalogram sl = cwt(ch.x, dt, wl, gl, BoundaryPolicy::zero);

    auto abs_matrix = [](const Scalogram& sg) {
        std::string out;
        const std::size_t nt = sg.times.size();
        for (std::size_t k = 0; k < sg.scales.size(); ++k) {
            for (std::size_t j = 0; j < nt; ++j) {
                if (j) out += ",";
                out += fmt(std::abs(sg.at(k, j)));
            }
            out += "\n";
        }
        return out;
    };
    write_text(prefix + "_morse_abs.csv", abs_matrix(sm));
    write_text(prefix + "_morlet_abs.csv", abs_matrix(sl));

    const double im = interference_metric(sm);
    const double il = interference_metric(sl);
    std::string js = "{\n  \"schema_version\": " + std::to_string(kSchemaVersion);
    js += ",\n  \"chirp\": {\"duration\": 200, \"rate\": 0.1, \"envelope_width\": 30, "
          "\"samples\": 2049}";
    js += ",\n  \"morse\": {\"beta\": 1, \"gamma\": 3, \"interference_metric\": " +
          json_number(fmt(im)) + ", \"rows\": " + std::to_string(sm.scales.size()) +
          ", \"cols\": " + std::to_string(sm.times.size()) + "}";
    js += ",\n  \"morlet\": {\"carrier\": " + json_number(fmt(nu)) +
          ", \"interference_metric\": " + json_number(fmt(il)) +
          ", \"rows\": " + std::to_string(sl.scales.size()) +
          ", \"cols\": " + std::to_string(sl.times.size()) + "}";
    js += ",\n  \"metric_ratio_morlet_over_morse\": " + json_number(fmt(il / im));
    js += ",\n  \"times\": " + json_array(sm.times);
    js += ",\n  \"morse_scales\": " + json_array(sm.scales);
    js += ",\n  \"morlet_scales\": " + json_array(sl.scales);
    js += "\n}\n";
    write_text(prefix + ".json", js);
    return 0;
}

int cmd_figure_wigner(double beta, double gamma, std::size_t points, int oversample,
                      const std::string& prefix) {
    if (beta <= 0.0 && gamma <= 0.0) {
        beta = 4.0;
        gamma = 3.0;
    }
    const FamilyChoice fam = family_from_flags(beta, gamma, 0.0);
    if (points % 2 == 0 || points < 33)
        throw std::invalid_argument("--points must be odd and at least 33 for the wigner figure");
    const double wmax = auto_wmax(fam);
    const SpectralWavelet spec = evaluate_spectrum(fam.morse, linspace0(wmax, 4097));
    const SampledWavelet sw = spectral_inverse(spec, points);
    const WignerVille wv = wigner_ville(sw, oversample);

    // Crop the frequency axis to the band holding the density.
    const double wpk = family_peak(fam);
    std::size_t lo = 0, hi = wv.frequencies.size();
    while (lo < hi && wv.frequencies[lo] < -1.5 * wpk) ++lo;
    while (hi > lo && wv.frequencies[hi - 1] > 3.0 * wpk) --hi;

    std::string body;
    for (std::size_t j = 0; j < wv.times.size(); ++j) {
        for (std::size_t l = lo; l < hi; ++l) {
            if (l > lo) body += ",";
            body += fmt(wv.at(j, l));
        }
        body += "\n";
    }
    write_text(prefix + "_wv.csv", body);

    const std::vector<double> cropped(wv.frequencies.begin() + lo, wv.frequencies.begin() + hi);
    std::string js = "{\n  \"schema_version\": " + std::to_string(kSchemaVersion);
    js += ",\n  \"beta\": " + json_number(fmt(beta));
    js += ",\n  \"gamma\": " + json_number(fmt(gamma));
    js += ",\n  \"oversample\": " + std::to_string(oversample);
    js += ",\n  \"aliasing_warning\": " + std::string(wv.aliasing_warning ? "true" : "false");
    js += ",\n  \"imag_residual\": " + json_number(fmt(wv.imag_residual));
    js += ",\n  \"layout\": \"rows are times, columns are frequencies\"";
    js += ",\n  \"times\": " + json_array(wv.times);
    js += ",\n  \"frequencies\": " + json_array(cropped);
    js += "\n}\n";
    write_text(prefix + ".json", js);
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Analytic wavelet toolkit"};
    app.require_subcommand(1);

    // props
    double p_beta = 0.0, p_gamma = 0.0, p_duration = 0.0, p_skew = 0.0, p_nu = 0.0;
    std::string p_format = "json", p_output;
    CLI::App* props = app.add_subcommand("props", "Report wavelet scalar properties");
    props->add_option("--beta", p_beta, "Morse spectral rise power");
    props->add_option("--gamma", p_gamma, "Morse envelope exponent");
    props->add_option("--duration", p_duration, "Demodulate duration P");
    props->add_option("--skewness", p_skew, "Imaginary demodulate skewness");
    props->add_option("--morlet-nu", p_nu, "Morlet carrier frequency");
    props->add_option("--format", p_format, "json or csv");
    props->add_option("--output", p_output, "Output path (stdout when omitted)");

    // wavelet
    double w_beta = 0.0, w_gamma = 0.0, w_nu = 0.0;
    std::size_t w_points = 1024;
    std::string w_domain = "time", w_method = "spectral", w_output;
    CLI::App* wavelet = app.add_subcommand("wavelet", "Sample a wavelet to CSV");
    wavelet->add_option("--beta", w_beta, "Morse spectral rise power");
    wavelet->add_option("--gamma", w_gamma, "Morse envelope exponent");
    wavelet->add_option("--morlet-nu", w_nu, "Morlet carrier frequency");
    wavelet->add_option("--points", w_points, "Sample count (spectral grid resolution)");
    wavelet->add_option("--domain", w_domain, "time or freq");
    wavelet->add_option("--method", w_method, "spectral or closed");
    wavelet->add_option("--output", w_output, "Output path (stdout when omitted)");

    // transform
    std::string t_input, t_wavelet = "morse:3,3", t_convention = "peak", t_boundary = "zero";
    std::string t_prefix = "scalogram";
    double t_voices = 8.0, t_min = 0.0, t_max = 0.0, t_dt = 1.0;
    CLI::App* transform = app.add_subcommand("transform", "Wavelet transform of a CSV signal");
    transform->add_option("--input", t_input, "Signal CSV (value or time,value)")->required();
    transform->add_option("--wavelet", t_wavelet, "morse:beta,gamma or morlet:nu");
    transform->add_option("--voices", t_voices, "Scale steps per octave");
    transform->add_option("--min-freq", t_min, "Band bottom, radians per unit time")->required();
    transform->add_option("--max-freq", t_max, "Band top, radians per unit time")->required();
    transform->add_option("--convention", t_convention, "peak, energy, or instantaneous");
    transform->add_option("--boundary", t_boundary, "zero, periodic, or mirror");
    transform->add_option("--dt", t_dt, "Sample spacing for single-column input");
    transform->add_option("--output", t_prefix, "Output prefix for _real/_imag/.json files");

    // figure
    std::string f_which, f_lattice = "0.5:4:15,-0.5:0.5:21", f_prefix = "figure";
    double f_beta = 0.0, f_gamma = 0.0;
    std::size_t f_points = 257;
    int f_oversample = 2;
    CLI::App* figure = app.add_subcommand("figure", "Generate demo datasets");
    figure->add_option("--which", f_which, "freq-map, area-map, chirp, or wigner")->required();
    figure->add_option("--lattice", f_lattice, "P/pi and skewness axes: p0:p1:np,s0:s1:ns");
    figure->add_option("--beta", f_beta, "Morse beta for the wigner figure");
    figure->add_option("--gamma", f_gamma, "Morse gamma for the wigner figure");
    figure->add_option("--points", f_points, "Time samples for the wigner figure (odd)");
    figure->add_option("--oversample", f_oversample, "Lag oversampling for the wigner figure");
    figure->add_option("--output", f_prefix, "Output prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (props->parsed())
        return cmd_props(p_beta, p_gamma, p_duration, p_skew, p_nu, p_format, p_output);
    if (wavelet->parsed())
        return cmd_wavelet(w_beta, w_gamma, w_nu, w_points, w_domain, w_method, w_output);
    if (transform->parsed())
        return cmd_transform(t_input, t_wavelet, t_voices, t_min, t_max, t_convention,
                             t_boundary, t_dt, t_prefix);
    if (figure->parsed()) {
        if (f_which == "freq-map") return cmd_figure_map(parse_lattice(f_lattice), false, f_prefix);
        if (f_which == "area-map") return cmd_figure_map(parse_lattice(f_lattice), true, f_prefix);
        if (f_which == "chirp") return cmd_figure_chirp(f_prefix);
        if (f_which == "wigner")
            return cmd_figure_wigner(f_beta, f_gamma, f_points, f_oversample, f_prefix);
        throw std::invalid_argument("--which must be freq-map, area-map, chirp, or wigner");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
