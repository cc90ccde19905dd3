#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorasim {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Invalid experiment/evaluator configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadrature or series evaluation failed to produce a finite, sane result
/// (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Static modulation parameters. `bandwidth_ratio` is B/fs; the default 1
/// means critically sampled (one sample per chip). Values below 1 select the
/// two-branch oversampled chirp form.
struct LoraParams {
    int sf = 7;
    double bandwidth_ratio = 1.0;

    int chips() const { return 1 << sf; }

    int samples_per_symbol() const {
        return static_cast<int>(std::llround(chips() / bandwidth_ratio));
    }

    void validate() const {
        if (sf < 7 || sf > 12)
            throw std::invalid_argument("LoraParams: sf must be in 7..12, got " + std::to_string(sf));
        if (!(bandwidth_ratio > 0.0) || bandwidth_ratio > 1.0)
            throw std::invalid_argument("LoraParams: bandwidth_ratio must be in (0, 1]");
    }
};

/// Complex baseband samples. `sample_rate_ratio` is fs/B, so a critically
/// sampled symbol has ratio 1 and N samples.
struct BasebandFrame {
    cvec samples;
    double sample_rate_ratio = 1.0;
};

/// DFT bin values after dechirping, unnormalized (Parseval factor N).
struct Spectrum {
    cvec bins;
};

struct ChannelState {
    double phase = 0.0;
    double magnitude = 1.0;
    double snr_db = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }

/// Real-part noise variance of one DFT bin: sigma^2 = N / (2 * SNR).
/// Per-sample complex noise variance is 1/SNR against a unit-power signal,
/// and the unnormalized DFT scales it by N, split evenly between I and Q.
inline double bin_noise_variance(const LoraParams& p, double snr_db) {
    return p.chips() / (2.0 * db_to_linear(snr_db));
}

}  // namespace lorasim
