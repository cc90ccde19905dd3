#pragma once

#include <cstdint>
#include <vector>

#include "lorasim/types.hpp"

namespace lorasim {

/// Iterative radix-2 FFT for power-of-two sizes up to 2^sf used here.
/// Unnormalized forward transform, X_k = sum_n x_n e^{-2pi i kn/N}.
class Fft {
public:
    explicit Fft(int n);

    void forward(cplx* data) const;
    int size() const { return n_; }

private:
    int n_ = 0;
    int log2n_ = 0;
    std::vector<cplx> twiddle_;        // e^{-2pi i j / n}, j < n/2
    std::vector<std::uint32_t> rev_;
};

/// Shared plan cache; thread-safe, plans are immutable once built.
const Fft& fft_plan(int n);

}  // namespace lorasim
