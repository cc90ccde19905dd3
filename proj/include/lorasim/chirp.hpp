#pragma once

#include <span>

#include "lorasim/rng.hpp"
#include "lorasim/types.hpp"

namespace lorasim {

/// Modulate symbol s as a cyclically shifted upchirp starting at phase zero.
/// With bandwidth_ratio == 1 this is the single-expression critically sampled
/// form; below 1 it is the two-branch form with the frequency fold at
/// chip N - s.
BasebandFrame generate_symbol(int s, const LoraParams& p);

/// Dechirping reference, the symbol-0 upchirp.
BasebandFrame generate_reference(const LoraParams& p);

/// Hadamard product with the conjugate reference followed by an unnormalized
/// N-point DFT. `symbol` must hold exactly N critically sampled values.
Spectrum dechirp_dft(std::span<const cplx> symbol, const LoraParams& p);

/// Bin index with the largest magnitude; ties break toward the lowest index.
int detect_noncoherent(const Spectrum& sp);

/// Bin index with the largest real part after de-rotating by phi_hat;
/// ties break toward the lowest index.
int detect_coherent(const Spectrum& sp, double phi_hat);

struct PhaseEstimate {
    double phi = 0.0;      // wrapped to [0, 2pi)
    bool degenerate = false;  // true when the bin-0 sum had no usable magnitude
};

/// Channel phase from the first n_pr preamble spectra (arg of the bin-0 sum).
PhaseEstimate estimate_phase(std::span<const Spectrum> preamble_spectra, int n_pr);

/// Add circular complex white noise with per-sample power 10^(-snr_db/10).
/// The stream is taken by value: a given (seed, stream) always yields the
/// same output and the caller's generator state is untouched.
BasebandFrame apply_awgn(const BasebandFrame& frame, double snr_db, Philox rng);

}  // namespace lorasim
