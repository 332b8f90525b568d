#include <cmath>

#include "ghzqkd/kernels.hpp"

// Reference kernels: straight loops, no pragmas. The parallel backend is
// checked against these amplitude-for-amplitude.

namespace ghzqkd::kernels::serial {

void apply_1q(std::span<Amp> amps, int bit, const Mat2& u) {
    const std::uint64_t pairs = amps.size() >> 1;
    for (std::uint64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = expand1(j, bit);
        const std::uint64_t i1 = i0 | (1ULL << bit);
        const Amp a0 = amps[i0];
        const Amp a1 = amps[i1];
        amps[i0] = u.m00 * a0 + u.m01 * a1;
        amps[i1] = u.m10 * a0 + u.m11 * a1;
    }
}

void apply_x(std::span<Amp> amps, int bit) {
    const std::uint64_t pairs = amps.size() >> 1;
    for (std::uint64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = expand1(j, bit);
        const std::uint64_t i1 = i0 | (1ULL << bit);
        std::swap(amps[i0], amps[i1]);
    }
}

void apply_z(std::span<Amp> amps, int bit) {
    const std::uint64_t pairs = amps.size() >> 1;
    for (std::uint64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i1 = expand1(j, bit) | (1ULL << bit);
        amps[i1] = -amps[i1];
    }
}

void apply_cnot(std::span<Amp> amps, int control_bit, int target_bit) {
    const int lo = control_bit < target_bit ? control_bit : target_bit;
    const int hi = control_bit < target_bit ? target_bit : control_bit;
    const std::uint64_t quads = amps.size() >> 2;
    const std::uint64_t cmask = 1ULL << control_bit;
    const std::uint64_t tmask = 1ULL << target_bit;
    for (std::uint64_t j = 0; j < quads; ++j) {
        const std::uint64_t i10 = expand2(j, lo, hi) | cmask;
        const std::uint64_t i11 = i10 | tmask;
        std::swap(amps[i10], amps[i11]);
    }
}

double prob_zero(std::span<const Amp> amps, int bit) {
    const std::uint64_t pairs = amps.size() >> 1;
    double p = 0.0;
    for (std::uint64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = expand1(j, bit);
        p += std::norm(amps[i0]);
    }
    return p;
}

double norm_sq(std::span<const Amp> amps) {
    double s = 0.0;
    for (const Amp& a : amps) s += std::norm(a);
    return s;
}

void scale(std::span<Amp> amps, double s) {
    for (Amp& a : amps) a *= s;
}

void collapse(std::span<Amp> amps, int bit, int outcome, double rescale) {
    const std::uint64_t pairs = amps.size() >> 1;
    const std::uint64_t mask = 1ULL << bit;
    for (std::uint64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = expand1(j, bit);
        const std::uint64_t i1 = i0 | mask;
        const std::uint64_t keep = outcome == 0 ? i0 : i1;
        const std::uint64_t drop = outcome == 0 ? i1 : i0;
        amps[keep] *= rescale;
        amps[drop] = Amp{0.0, 0.0};
    }
}

void compact_bit(std::span<const Amp> src, std::span<Amp> dst, int bit, int value) {
    const std::uint64_t mask = value ? (1ULL << bit) : 0;
    for (std::uint64_t j = 0; j < dst.size(); ++j) {
        dst[j] = src[expand1(j, bit) | mask];
    }
}

void bell_project(std::span<const Amp> src, std::span<Amp> dst, int bit_a, int bit_b, int phase,
                  int parity) {
    const int lo = bit_a < bit_b ? bit_a : bit_b;
    const int hi = bit_a < bit_b ? bit_b : bit_a;
    const std::uint64_t amask = 1ULL << bit_a;
    const std::uint64_t bmask = 1ULL << bit_b;
    const double sign = phase == 0 ? 1.0 : -1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t j = 0; j < dst.size(); ++j) {
        const std::uint64_t base = expand2(j, lo, hi);
        // parity 0: <Phi|: (a=0,b=0) + sign (a=1,b=1); parity 1: <Psi|: (a=0,b=1) + sign (a=1,b=0)
        const std::uint64_t first = parity == 0 ? base : base | bmask;
        const std::uint64_t second = parity == 0 ? base | amask | bmask : base | amask;
        dst[j] = (src[first] + sign * src[second]) * inv_sqrt2;
    }
}

Amp dot(std::span<const Amp> a, std::span<const Amp> b) {
    Amp s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace ghzqkd::kernels::serial
