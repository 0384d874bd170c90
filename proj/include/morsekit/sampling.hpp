#pragma once

#include <complex>
#include <string>
#include <vector>

namespace morsekit {

// Frequency sampling of a wavelet spectrum, either one-sided (uniform grid
// starting at omega = 0) or FFT-ordered including negative frequencies.
// Values are real for the supported families.
struct SpectralWavelet {
    std::vector<double> omega;
    std::vector<double> values;
    double scale = 1.0;
};

// Time-domain samples on a grid symmetric about t = 0 with an odd point count.
struct SampledWavelet {
    std::vector<double> t;
    std::vector<std::complex<double>> values;
    std::string source;             // evaluation path that produced the samples
    bool aliasing_warning = false;  // endpoint magnitude above 1e-6 of the peak
};

}  // namespace morsekit
