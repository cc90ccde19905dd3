#include "lorasim/chirp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lorasim/fft.hpp"

namespace lorasim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline cplx unit_phase_cycles(double cycles) {
    const double a = kTwoPi * cycles;
    return {std::cos(a), std::sin(a)};
}

}  // namespace

BasebandFrame generate_symbol(int s, const LoraParams& p) {
    p.validate();
    const long long N = p.chips();
    if (s < 0 || s >= N)
        throw std::invalid_argument("generate_symbol: symbol index out of range");

    BasebandFrame out;
    out.sample_rate_ratio = 1.0 / p.bandwidth_ratio;
    const int samples = p.samples_per_symbol();
    out.samples.resize(samples);

    if (p.bandwidth_ratio == 1.0) {
        // cycles = (n^2 + (2s - N) n) / (2N); the numerator is reduced mod 2N
        // in integer arithmetic so the phase stays exact for large n.
        const long long mod = 2 * N;
        for (long long n = 0; n < samples; ++n) {
            long long num = (n * n + (2 * s - N) * n) % mod;
            if (num < 0) num += mod;
            out.samples[n] = unit_phase_cycles(static_cast<double>(num) / static_cast<double>(mod));
        }
        return out;
    }

    const double inv_ratio = 1.0 / p.bandwidth_ratio;
    const long long osf = std::llround(inv_ratio);
    const bool integer_osf = std::abs(inv_ratio - static_cast<double>(osf)) < 1e-9;

    if (integer_osf) {
        // branch 1: (n^2 + (2s - N) osf n) / (2N osf^2); branch 2 subtracts n/osf.
        const long long mod = 2 * N * osf * osf;
        const long long fold = (N - s) * osf;  // first post-fold sample index
        for (long long n = 0; n < samples; ++n) {
            const long long lin = (n < fold ? (2 * s - N) : (2 * s - 3 * N)) * osf * n;
            long long num = (n * n + lin) % mod;
            if (num < 0) num += mod;
            out.samples[n] = unit_phase_cycles(static_cast<double>(num) / static_cast<double>(mod));
        }
        return out;
    }

    const double r = p.bandwidth_ratio;
    for (int n = 0; n < samples; ++n) {
        const bool pre_fold = n * r < static_cast<double>(N - s);
        const double offset = pre_fold ? 0.5 : 1.5;
        long double cycles = (static_cast<long double>(r) * r * n * n) / (2.0L * N)
                           + (static_cast<long double>(s) / N - offset) * r * n;
        cycles = cycles - std::floor(static_cast<double>(cycles));
        out.samples[n] = unit_phase_cycles(static_cast<double>(cycles));
    }
    return out;
}

BasebandFrame generate_reference(const LoraParams& p) { return generate_symbol(0, p); }

Spectrum dechirp_dft(std::span<const cplx> symbol, const LoraParams& p) {
    p.validate();
    const int N = p.chips();
    if (static_cast<int>(symbol.size()) != N)
        throw std::invalid_argument("dechirp_dft: expected exactly N critically sampled values");

    // conj(x_ref[n]) = e^{-2pi i (n^2 - nN)/(2N)}, reduced exactly as above
    Spectrum sp;
    sp.bins.resize(N);
    const long long mod = 2LL * N;
    for (long long n = 0; n < N; ++n) {
        long long num = (n * n - n * N) % mod;
        if (num < 0) num += mod;
        sp.bins[n] = symbol[n] * unit_phase_cycles(-static_cast<double>(num) / static_cast<double>(mod));
    }
    fft_plan(N).forward(sp.bins.data());
    return sp;
}

int detect_noncoherent(const Spectrum& sp) {
    int best = 0;
    double best_mag = std::norm(sp.bins.at(0));
    for (int k = 1; k < static_cast<int>(sp.bins.size()); ++k) {
        const double m = std::norm(sp.bins[k]);
        if (m > best_mag) {
            best_mag = m;
            best = k;
        }
    }
    return best;
}

int detect_coherent(const Spectrum& sp, double phi_hat) {
    const cplx rot = unit_phase_cycles(-phi_hat / kTwoPi);
    int best = 0;
    double best_re = (sp.bins.at(0) * rot).real();
    for (int k = 1; k < static_cast<int>(sp.bins.size()); ++k) {
        const double re = (sp.bins[k] * rot).real();
        if (re > best_re) {
            best_re = re;
            best = k;
        }
    }
    return best;
}

PhaseEstimate estimate_phase(std::span<const Spectrum> preamble_spectra, int n_pr) {
    if (n_pr < 1 || n_pr > static_cast<int>(preamble_spectra.size()))
        throw std::invalid_argument("estimate_phase: need 1 <= n_pr <= #spectra");
    cplx acc = 0.0;
    for (int i = 0; i < n_pr; ++i) acc += preamble_spectra[i].bins.at(0);
    PhaseEstimate est;
    if (std::abs(acc) < 1e-9) {
        est.degenerate = true;
        return est;
    }
    est.phi = std::arg(acc);
    if (est.phi < 0.0) est.phi += kTwoPi;
    return est;
}

BasebandFrame apply_awgn(const BasebandFrame& frame, double snr_db, Philox rng) {
    if (!std::isfinite(snr_db))
        throw std::invalid_argument("apply_awgn: snr_db must be finite");
    const double sd = std::sqrt(0.5 * db_to_linear(-snr_db));
    BasebandFrame out = frame;
    for (auto& v : out.samples) {
        const double re = rng.normal();
        const double im = rng.normal();
        v += cplx(sd * re, sd * im);
    }
    return out;
}

}  // namespace lorasim
