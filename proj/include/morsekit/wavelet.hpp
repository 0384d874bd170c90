#pragma once

#include <memory>
#include <string>

#include "morsekit/morlet.hpp"
#include "morsekit/morse.hpp"

namespace morsekit {

// Which characteristic frequency converts between scale and frequency:
// spectral peak, energy-weighted mean, or instantaneous frequency at t = 0.
enum class FrequencyConvention { peak, energy, instantaneous };

// Family-agnostic view of a wavelet used by the transform engine. Instances
// are immutable after construction and safe for concurrent reads.
class AnalyticWavelet {
public:
    virtual ~AnalyticWavelet() = default;
    // Scale-1 transfer function; real-valued for both families here.
    virtual double spectrum(double omega) const = 0;
    virtual double peak_frequency() const = 0;
    virtual double energy_frequency() const = 0;
    virtual double central_frequency() const = 0;  // instantaneous frequency at t = 0
    virtual double duration() const = 0;
    // Normalized spectral derivative omega^n Psi^(n)/Psi at the peak, n in {2, 3}.
    virtual double peak_derivative(int n) const = 0;
    virtual std::string name() const = 0;

    double frequency_for(FrequencyConvention c) const;
};

class MorseWavelet final : public AnalyticWavelet {
public:
    explicit MorseWavelet(MorseParams p);
    double spectrum(double omega) const override;
    double peak_frequency() const override { return peak_; }
    double energy_frequency() const override { return energy_; }
    double central_frequency() const override { return central_; }
    double duration() const override { return duration_; }
    double peak_derivative(int n) const override;
    std::string name() const override;
    const MorseParams& params() const { return params_; }

private:
    MorseParams params_;
    double peak_, energy_, central_, duration_;
};

class MorletWavelet final : public AnalyticWavelet {
public:
    explicit MorletWavelet(double carrier);
    double spectrum(double omega) const override;
    double peak_frequency() const override { return solution_.peak_frequency; }
    double energy_frequency() const override { return energy_; }
    double central_frequency() const override { return central_; }
    double duration() const override { return duration_; }
    double peak_derivative(int n) const override;
    std::string name() const override;
    double carrier() const { return carrier_; }

private:
    double carrier_;
    MorletSolution solution_;
    double correction_;  // exp(-carrier^2/2)
    double energy_, central_, duration_;
};

}  // namespace morsekit
