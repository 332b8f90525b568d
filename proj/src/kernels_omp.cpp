#include <cmath>

#include "ghzqkd/kernels.hpp"

// OpenMP backend. Loops below a size cutover run serially inside the same
// function; thread spawn costs more than the sweep for small registers.

namespace ghzqkd::kernels::omp {

namespace {
constexpr std::uint64_t kParallelCutover = 1ULL << 14;
}

void apply_1q(std::span<Amp> amps, int bit, const Mat2& u) {
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    Amp* const a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = expand1(static_cast<std::uint64_t>(j), bit);
        const std::uint64_t i1 = i0 | (1ULL << bit);
        const Amp a0 = a[i0];
        const Amp a1 = a[i1];
        a[i0] = u.m00 * a0 + u.m01 * a1;
        a[i1] = u.m10 * a0 + u.m11 * a1;
    }
}

void apply_x(std::span<Amp> amps, int bit) {
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    Amp* const a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = expand1(static_cast<std::uint64_t>(j), bit);
        const std::uint64_t i1 = i0 | (1ULL << bit);
        const Amp tmp = a[i0];
        a[i0] = a[i1];
        a[i1] = tmp;
    }
}

void apply_z(std::span<Amp> amps, int bit) {
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    Amp* const a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i1 = expand1(static_cast<std::uint64_t>(j), bit) | (1ULL << bit);
        a[i1] = -a[i1];
    }
}

void apply_cnot(std::span<Amp> amps, int control_bit, int target_bit) {
    const int lo = control_bit < target_bit ? control_bit : target_bit;
    const int hi = control_bit < target_bit ? target_bit : control_bit;
    const std::int64_t quads = static_cast<std::int64_t>(amps.size() >> 2);
    const std::uint64_t cmask = 1ULL << control_bit;
    const std::uint64_t tmask = 1ULL << target_bit;
    Amp* const a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < quads; ++j) {
        const std::uint64_t i10 = expand2(static_cast<std::uint64_t>(j), lo, hi) | cmask;
        const std::uint64_t i11 = i10 | tmask;
        const Amp tmp = a[i10];
        a[i10] = a[i11];
        a[i11] = tmp;
    }
}

double prob_zero(std::span<const Amp> amps, int bit) {
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    const Amp* const a = amps.data();
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p) \
    if (amps.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < pairs; ++j) {
        p += std::norm(a[expand1(static_cast<std::uint64_t>(j), bit)]);
    }
    return p;
}

double norm_sq(std::span<const Amp> amps) {
    const std::int64_t n = static_cast<std::int64_t>(amps.size());
    const Amp* const a = amps.data();
    double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) \
    if (amps.size() >= kParallelCutover)
    for (std::int64_t i = 0; i < n; ++i) s += std::norm(a[i]);
    return s;
}

void scale(std::span<Amp> amps, double s) {
    const std::int64_t n = static_cast<std::int64_t>(amps.size());
    Amp* const a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelCutover)
    for (std::int64_t i = 0; i < n; ++i) a[i] *= s;
}

void collapse(std::span<Amp> amps, int bit, int outcome, double rescale) {
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    const std::uint64_t mask = 1ULL << bit;
    Amp* const a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = expand1(static_cast<std::uint64_t>(j), bit);
        const std::uint64_t i1 = i0 | mask;
        const std::uint64_t keep = outcome == 0 ? i0 : i1;
        const std::uint64_t drop = outcome == 0 ? i1 : i0;
        a[keep] *= rescale;
        a[drop] = Amp{0.0, 0.0};
    }
}

void compact_bit(std::span<const Amp> src, std::span<Amp> dst, int bit, int value) {
    const std::int64_t n = static_cast<std::int64_t>(dst.size());
    const std::uint64_t mask = value ? (1ULL << bit) : 0;
    const Amp* const s = src.data();
    Amp* const d = dst.data();
#pragma omp parallel for schedule(static) if (dst.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < n; ++j) {
        d[j] = s[expand1(static_cast<std::uint64_t>(j), bit) | mask];
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
    const std::int64_t n = static_cast<std::int64_t>(dst.size());
    const Amp* const s = src.data();
    Amp* const d = dst.data();
#pragma omp parallel for schedule(static) if (dst.size() >= kParallelCutover)
    for (std::int64_t j = 0; j < n; ++j) {
        const std::uint64_t base = expand2(static_cast<std::uint64_t>(j), lo, hi);
        const std::uint64_t first = parity == 0 ? base : base | bmask;
        const std::uint64_t second = parity == 0 ? base | amask | bmask : base | amask;
        d[j] = (s[first] + sign * s[second]) * inv_sqrt2;
    }
}

Amp dot(std::span<const Amp> a, std::span<const Amp> b) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    double re = 0.0;
    double im = 0.0;
    const Amp* const pa = a.data();
    const Amp* const pb = b.data();
#pragma omp parallel for schedule(static) reduction(+ : re, im) \
    if (a.size() >= kParallelCutover)
    for (std::int64_t i = 0; i < n; ++i) {
        const Amp v = std::conj(pa[i]) * pb[i];
        re += v.real();
        im += v.imag();
    }
    return Amp{re, im};
}

}  // namespace ghzqkd::kernels::omp
