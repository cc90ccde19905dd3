#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "lorasim/types.hpp"

namespace lorasim::detail {

// sin(pi u M / N) / sin(pi u / N) with the limit value at u = l N.
inline double dirichlet_ratio(double u, int M, int N) {
    if (M <= 0) return 0.0;
    const double x = std::numbers::pi * u / N;
    const double den = std::sin(x);
    if (std::abs(den) < 1e-12) {
        const long long l = std::llround(u / N);
        const bool negate = ((l * (M - 1)) & 1) != 0;
        return negate ? -static_cast<double>(M) : static_cast<double>(M);
    }
    return std::sin(x * M) / den;
}

struct BranchTerm {
    double u = 0.0;  // Dirichlet argument at k = 0: s_i - tau + tau_cfo
    int M = 0;       // segment length
    double c0 = 0.0; // theta_j = (pi/N)(c0 + k * ck), omega excluded
    double ck = 0.0;
};

// Closed-form pattern for one (s1, s2, tau, tau_cfo, m) geometry; bins are
// the omega = 0 complex pattern including the sqrt(P_I) amplitude, so the
// projection at phase omega is Re(e^{j omega} * bin(k)).
struct ClosedFormPattern {
    std::array<BranchTerm, 4> terms{};
    double amp = 1.0;
    int N = 0;

    cplx bin(int k) const {
        const double pin = std::numbers::pi / N;
        cplx acc = 0.0;
        for (const auto& t : terms) {
            if (t.M <= 0) continue;
            const double a = dirichlet_ratio(t.u - k, t.M, N);
            const double theta = pin * (t.c0 + static_cast<double>(k) * t.ck);
            acc += a * cplx{std::cos(theta), -std::sin(theta)};
        }
        return amp * acc;
    }
};

inline ClosedFormPattern make_closed_form(int s_i1, int s_i2, double tau, double tau_cfo, int m,
                                          double amp, int N) {
    const double ct = std::ceil(tau);
    const double s1 = s_i1;
    const double s2 = s_i2;
    const double m1 = std::max(ct - s1, 0.0);
    const double mn = std::min(N - s2 + ct, static_cast<double>(N));
    const double cfo = -2.0 * N * (m - 1) * tau_cfo;
    const double tt = tau - tau_cfo;

    ClosedFormPattern p;
    p.amp = amp;
    p.N = N;
    auto& t = p.terms;

    t[0].u = s1 - tau + tau_cfo;
    t[0].M = static_cast<int>(m1);
    t[0].ck = ct - s1 - 1.0;
    t[0].c0 = -tau * tau + tau * N + s1 * (2.0 * tau - ct + s1 + 1.0) + tt * t[0].ck + cfo;

    t[1].u = t[0].u;
    t[1].M = static_cast<int>(ct - m1);
    t[1].ck = ct + m1 - 1.0;
    t[1].c0 = -tau * tau - tau * N + s1 * (2.0 * tau - ct - m1 + 1.0) + tt * t[1].ck + cfo;

    t[2].u = s2 - tau + tau_cfo;
    t[2].M = static_cast<int>(mn - ct);
    t[2].ck = mn + ct - 1.0;
    t[2].c0 = -tau * tau - tau * N + s2 * (2.0 * tau - mn - ct + 1.0) + tt * t[2].ck + cfo;

    t[3].u = t[2].u;
    t[3].M = static_cast<int>(std::max(s2 - ct, 0.0));
    t[3].ck = 2.0 * N - s2 + ct - 1.0;
    t[3].c0 = -tau * tau - 3.0 * tau * N + s2 * (2.0 * tau - 2.0 * N + s2 - ct + 1.0)
            + tt * t[3].ck + cfo;
    return p;
}

}  // namespace lorasim::detail
