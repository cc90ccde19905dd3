#include "lorasim/rng.hpp"

#include <cmath>
#include <numbers>

namespace lorasim {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t c[4], const std::uint32_t k[2]) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0), hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1), hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t r0 = hi1 ^ c[1] ^ k[0];
    const std::uint32_t r1 = lo1;
    const std::uint32_t r2 = hi0 ^ c[3] ^ k[1];
    const std::uint32_t r3 = lo0;
    c[0] = r0; c[1] = r1; c[2] = r2; c[3] = r3;
}

}  // namespace

void Philox::refill() {
    std::uint32_t c[4] = {ctr_[0], ctr_[1], ctr_[2], ctr_[3]};
    std::uint32_t k[2] = {key_[0], key_[1]};
    for (int r = 0; r < 10; ++r) {
        if (r > 0) { k[0] += kWeyl0; k[1] += kWeyl1; }
        philox_round(c, k);
    }
    buf_[0] = c[0]; buf_[1] = c[1]; buf_[2] = c[2]; buf_[3] = c[3];
    pos_ = 0;
    if (++ctr_[0] == 0) ++ctr_[1];  // 64-bit draw counter; stream words untouched
}

double Philox::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

std::uint64_t mix_seed(std::uint64_t seed, const char* tag) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (const char* p = tag; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
    }
    // splitmix64 finalizer
    h += 0x9E3779B97F4A7C15ull;
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ull;
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBull;
    return h ^ (h >> 31);
}

}  // namespace lorasim
