#include "lorasim/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lorasim/chirp.hpp"
#include "lorasim/detail/closed_form.hpp"
#include "lorasim/fft.hpp"

namespace lorasim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline cplx unit_phase_cycles(double cycles) {
    const double a = kTwoPi * cycles;
    return {std::cos(a), std::sin(a)};
}

// e^{j 2 pi (t^2/(2N) + t (s/N - offset))} evaluated at a fractional chip
// coordinate t, reduced to [0,1) cycles in long double before the trig call.
inline cplx chirp_at(double t, int s, int N, bool post_fold) {
    const double offset = post_fold ? 1.5 : 0.5;
    long double cycles = static_cast<long double>(t) * t / (2.0L * N)
                       + static_cast<long double>(t) * (static_cast<long double>(s) / N - offset);
    cycles -= std::floor(static_cast<double>(cycles));
    return unit_phase_cycles(static_cast<double>(cycles));
}

}  // namespace

void InterfererConfig::validate(const LoraParams& p) const {
    const int N = p.chips();
    if (s_i1 < 0 || s_i1 >= N || s_i2 < 0 || s_i2 >= N)
        throw std::invalid_argument("InterfererConfig: symbol index out of range");
    if (tau < 0.0 || tau >= N)
        throw std::invalid_argument("InterfererConfig: tau must lie in [0, N)");
    if (m < 1) throw std::invalid_argument("InterfererConfig: m must be >= 1");
}

BasebandFrame interferer_waveform(const InterfererConfig& cfg, const LoraParams& p) {
    p.validate();
    cfg.validate(p);
    const int N = p.chips();
    const int ct = static_cast<int>(std::ceil(cfg.tau));

    BasebandFrame out;
    out.samples.assign(N, cplx{});
    // N_L1 and N_L2: visible tail of s_i1, pre- and post-fold
    for (int n = 0; n < std::min(ct - cfg.s_i1, N); ++n)
        out.samples[n] = chirp_at(n + N - cfg.tau, cfg.s_i1, N, false);
    for (int n = std::max(ct - cfg.s_i1, 0); n < std::min(ct, N); ++n)
        out.samples[n] = chirp_at(n + N - cfg.tau, cfg.s_i1, N, true);
    // N_L3 and N_L4: head of s_i2
    for (int n = ct; n < std::min(N - cfg.s_i2 + ct, N); ++n)
        out.samples[n] = chirp_at(n - cfg.tau, cfg.s_i2, N, false);
    for (int n = std::max(N - cfg.s_i2 + ct, ct); n < N; ++n)
        out.samples[n] = chirp_at(n - cfg.tau, cfg.s_i2, N, true);
    return out;
}

BasebandFrame interferer_waveform_oversampled(const InterfererConfig& cfg, const LoraParams& p,
                                              int osf) {
    p.validate();
    cfg.validate(p);
    if (osf < 1) throw std::invalid_argument("interferer_waveform_oversampled: osf must be >= 1");
    const int N = p.chips();

    LoraParams up = p;
    up.bandwidth_ratio = 1.0 / osf;
    const BasebandFrame a = generate_symbol(cfg.s_i1, up);
    const BasebandFrame b = generate_symbol(cfg.s_i2, up);

    cvec concat;
    concat.reserve(a.samples.size() + b.samples.size());
    concat.insert(concat.end(), a.samples.begin(), a.samples.end());
    concat.insert(concat.end(), b.samples.begin(), b.samples.end());

    const long long start = static_cast<long long>(N) * osf - std::llround(cfg.tau * osf);
    BasebandFrame out;
    out.samples.resize(N);
    for (int n = 0; n < N; ++n)
        out.samples[n] = concat.at(start + static_cast<long long>(n) * osf);
    return out;
}

BasebandFrame cfo_phasor(const InterfererConfig& cfg, const LoraParams& p) {
    p.validate();
    const int N = p.chips();
    BasebandFrame out;
    out.samples.resize(N);
    for (int n = 0; n < N; ++n) {
        long double cycles = static_cast<long double>(n + static_cast<long long>(cfg.m - 1) * N)
                           * cfg.tau_cfo / N;
        cycles -= std::floor(static_cast<double>(cycles));
        out.samples[n] = unit_phase_cycles(static_cast<double>(cycles));
    }
    return out;
}

InterferencePattern received_pattern(const InterfererConfig& cfg, const LoraParams& p) {
    const BasebandFrame xi = interferer_waveform(cfg, p);
    const BasebandFrame ci = cfo_phasor(cfg, p);
    const BasebandFrame ref = generate_reference(p);
    const int N = p.chips();

    InterferencePattern pat;
    pat.bins.resize(N);
    const cplx scale = db_to_amplitude(cfg.p_i_db) * unit_phase_cycles(cfg.omega / kTwoPi);
    for (int n = 0; n < N; ++n)
        pat.bins[n] = scale * ci.samples[n] * xi.samples[n] * std::conj(ref.samples[n]);
    fft_plan(N).forward(pat.bins.data());
    return pat;
}

cplx projection_basis(int k, const InterfererConfig& cfg, const LoraParams& p) {
    p.validate();
    cfg.validate(p);
    const int N = p.chips();
    if (k < 0 || k >= N) throw std::invalid_argument("projection_basis: bin out of range");

    const auto terms = closed_form_terms(cfg, N);
    const double pin = std::numbers::pi / N;
    cplx acc = 0.0;
    for (const auto& t : terms) {
        if (t.M <= 0) continue;
        const double amp = dirichlet_ratio(t.u - k, t.M, N);
        const double theta = pin * (t.c0 + static_cast<double>(k) * t.ck);
        // basis uses e^{-j theta} so that Re(e^{j omega} basis) recovers
        // sum_j A_j cos(theta_j - omega)
        acc += amp * cplx{std::cos(theta), -std::sin(theta)};
    }
    return db_to_amplitude(cfg.p_i_db) * acc;
}

double projection_closed_form(int k, const InterfererConfig& cfg, const LoraParams& p) {
    const cplx rot = unit_phase_cycles(cfg.omega / kTwoPi);
    return (rot * projection_basis(k, cfg, p)).real();
}

std::pair<int, int> cluster_centers(const InterfererConfig& cfg, const LoraParams& p) {
    const int N = p.chips();
    // round half away from zero, fixed for bin-set reproducibility
    const long long base = N - std::llround(cfg.tau - cfg.tau_cfo);
    auto wrap = [N](long long v) { return static_cast<int>(((v % N) + N) % N); };
    return {wrap(base + cfg.s_i1), wrap(base + cfg.s_i2)};
}

std::vector<int> relevant_bins(const InterfererConfig& cfg, int K, const LoraParams& p) {
    p.validate();
    cfg.validate(p);
    const int N = p.chips();
    if (K < 1 || K % 2 == 0 || K >= N)
        throw std::invalid_argument("relevant_bins: K must be odd and in [1, N)");

    const auto [c1, c2] = cluster_centers(cfg, p);
    std::vector<int> bins;
    bins.reserve(2 * K);
    for (const int c : {c1, c2})
        for (int d = -(K / 2); d <= K / 2; ++d) bins.push_back(((c + d) % N + N) % N);
    std::sort(bins.begin(), bins.end());
    bins.erase(std::unique(bins.begin(), bins.end()), bins.end());
    return bins;
}

}  // namespace lorasim
