#include "lorasim/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace lorasim {

Fft::Fft(int n) : n_(n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("Fft: size must be a power of two >= 2");
    while ((1 << log2n_) < n) ++log2n_;

    twiddle_.resize(n / 2);
    for (int j = 0; j < n / 2; ++j) {
        const double a = -2.0 * std::numbers::pi * j / n;
        twiddle_[j] = {std::cos(a), std::sin(a)};
    }
    rev_.resize(n);
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) {
        std::uint32_t r = 0;
        for (int b = 0; b < log2n_; ++b) r |= ((i >> b) & 1u) << (log2n_ - 1 - b);
        rev_[i] = r;
    }
}

void Fft::forward(cplx* x) const {
    const int n = n_;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t r = rev_[i];
        if (static_cast<std::uint32_t>(i) < r) std::swap(x[i], x[r]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len >> 1;
        const int stride = n / len;
        for (int base = 0; base < n; base += len) {
            for (int j = 0; j < half; ++j) {
                const cplx w = twiddle_[static_cast<std::size_t>(j) * stride];
                const cplx u = x[base + j];
                const cplx v = x[base + j + half] * w;
                x[base + j] = u + v;
                x[base + j + half] = u - v;
            }
        }
    }
}

const Fft& fft_plan(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Fft>> cache;
    std::scoped_lock lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Fft>(n);
    return *slot;
}

}  // namespace lorasim
