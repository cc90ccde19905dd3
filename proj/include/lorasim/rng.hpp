#pragma once

#include <cstdint>

namespace lorasim {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Streams are cheap value types: stream i of a given seed is a pure function
/// of (seed, i), so per-trial substreams reproduce identically regardless of
/// how trials are scheduled across workers.
class Philox {
public:
    explicit Philox(std::uint64_t seed, std::uint64_t stream = 0)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    std::uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    /// Uniform in [0, 1) with 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), multiply-shift mapping.
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller; the second deviate is cached.
    double normal();

private:
    void refill();

    std::uint32_t key_[2];
    std::uint32_t ctr_[4];
    std::uint32_t buf_[4] = {0, 0, 0, 0};
    int pos_ = 4;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// 64-bit mix for deriving row/stream seeds from strings (FNV-1a + splitmix).
std::uint64_t mix_seed(std::uint64_t seed, const char* tag);

}  // namespace lorasim
