#pragma once

#include <vector>

#include "lorasim/types.hpp"

namespace lorasim {

/// One same-SF collision realization. tau is the offset, in chips, of the
/// second interfering symbol's first chip relative to the observed symbol
/// window; tau_cfo is the interferer CFO expressed as a post-dechirp bin
/// offset; omega is the interferer phase relative to the (de-rotated) user.
struct InterfererConfig {
    int s_i1 = 0;
    int s_i2 = 0;
    double tau = 0.0;       // [0, N)
    double tau_cfo = 0.0;
    int m = 1;              // 1-based symbol index within the interfering packet
    double p_i_db = 0.0;    // received interferer power, |h_I|^2 in dB
    double omega = 0.0;     // [0, 2pi)

    int offset_int() const { return static_cast<int>(std::floor(tau)); }
    double offset_frac() const { return tau - std::floor(tau); }
    int cfo_int() const { return static_cast<int>(std::floor(tau_cfo)); }
    double cfo_frac() const { return tau_cfo - std::floor(tau_cfo); }

    void validate(const LoraParams& p) const;
};

struct InterferencePattern {
    cvec bins;
};

/// Piecewise interferer window: tail of s_i1 followed by the head of s_i2,
/// both offset by the fractional tau, four branches in total (pre/post fold
/// per symbol). Unit magnitude per sample; power and phase are not applied.
BasebandFrame interferer_waveform(const InterfererConfig& cfg, const LoraParams& p);

/// Reference construction for the same window: both symbols generated at
/// `osf` times the chip rate, concatenated, shifted by round(osf * tau)
/// samples and decimated back to N. Matches interferer_waveform exactly when
/// tau is on the 1/osf grid.
BasebandFrame interferer_waveform_oversampled(const InterfererConfig& cfg, const LoraParams& p,
                                              int osf = 32);

/// CFO rotation e^{j 2 pi (n + (m-1)N) tau_cfo / N} for the m-th symbol.
BasebandFrame cfo_phasor(const InterfererConfig& cfg, const LoraParams& p);

/// Received interference pattern R_k: dechirped DFT of the interferer window
/// with amplitude sqrt(P_I) and phase omega folded in.
InterferencePattern received_pattern(const InterfererConfig& cfg, const LoraParams& p);

/// Closed-form real-axis projection Re(V_k) of the de-rotated pattern at bin
/// k, from the four Dirichlet-kernel terms. Removable singularities use the
/// kernel limit with its sign.
double projection_closed_form(int k, const InterfererConfig& cfg, const LoraParams& p);

/// Complex closed-form pattern value at bin k with omega excluded, i.e.
/// projection_closed_form(k) == Re(e^{j omega} * projection_basis(k)).
/// Equals received_pattern's bin k at omega = 0.
cplx projection_basis(int k, const InterfererConfig& cfg, const LoraParams& p);

/// Union of the two K-wide (K odd) bin windows centered on the interference
/// clusters, sorted, duplicates removed.
std::vector<int> relevant_bins(const InterfererConfig& cfg, int K, const LoraParams& p);

/// Cluster centers [N - round(tau - tau_cfo) + s_i{1,2}] mod N.
std::pair<int, int> cluster_centers(const InterfererConfig& cfg, const LoraParams& p);

}  // namespace lorasim
