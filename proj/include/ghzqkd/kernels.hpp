#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "ghzqkd/types.hpp"

namespace ghzqkd::kernels {

// Amplitude-array kernels. Qubits are addressed by bit position within the
// basis index (bit 0 = least significant). The state engine owns the mapping
// from qubit labels to bit positions.
//
// Two implementations share this interface: kernels::serial is the plain
// reference used by tests and as the baseline in benchmarks; kernels::omp
// parallelises the same loops with OpenMP and must agree amplitude-for-
// amplitude with the reference.

struct Mat2 {
    Amp m00, m01, m10, m11;
};

enum class Backend : std::uint8_t { Serial, Parallel };

// Expand an index over n-1 qubits to an n-qubit index with a zero at `bit`.
inline std::uint64_t expand1(std::uint64_t j, int bit) {
    const std::uint64_t low = j & ((1ULL << bit) - 1);
    return ((j >> bit) << (bit + 1)) | low;
}

// Expand an index over n-2 qubits to an n-qubit index with zeros at the two
// given bit positions (lo < hi).
inline std::uint64_t expand2(std::uint64_t j, int lo, int hi) {
    const std::uint64_t low = j & ((1ULL << lo) - 1);
    const std::uint64_t mid = (j >> lo) & ((1ULL << (hi - 1 - lo)) - 1);
    const std::uint64_t high = j >> (hi - 1);
    return (high << (hi + 1)) | (mid << (lo + 1)) | low;
}

namespace serial {

void apply_1q(std::span<Amp> amps, int bit, const Mat2& u);
void apply_x(std::span<Amp> amps, int bit);
void apply_z(std::span<Amp> amps, int bit);
void apply_cnot(std::span<Amp> amps, int control_bit, int target_bit);
double prob_zero(std::span<const Amp> amps, int bit);
double norm_sq(std::span<const Amp> amps);
void scale(std::span<Amp> amps, double s);
// Zero the branch where `bit` != outcome and rescale the kept branch.
void collapse(std::span<Amp> amps, int bit, int outcome, double rescale);
// Copy the sub-register where `bit` == value into dst (half the size of src).
void compact_bit(std::span<const Amp> src, std::span<Amp> dst, int bit, int value);
// Project qubits (bit_a, bit_b) onto the Bell state indexed by (phase, parity)
// and write the unnormalized survivor register (src size / 4) into dst.
void bell_project(std::span<const Amp> src, std::span<Amp> dst, int bit_a, int bit_b, int phase,
                  int parity);
Amp dot(std::span<const Amp> a, std::span<const Amp> b);

}  // namespace serial

namespace omp {

void apply_1q(std::span<Amp> amps, int bit, const Mat2& u);
void apply_x(std::span<Amp> amps, int bit);
void apply_z(std::span<Amp> amps, int bit);
void apply_cnot(std::span<Amp> amps, int control_bit, int target_bit);
double prob_zero(std::span<const Amp> amps, int bit);
double norm_sq(std::span<const Amp> amps);
void scale(std::span<Amp> amps, double s);
void collapse(std::span<Amp> amps, int bit, int outcome, double rescale);
void compact_bit(std::span<const Amp> src, std::span<Amp> dst, int bit, int value);
void bell_project(std::span<const Amp> src, std::span<Amp> dst, int bit_a, int bit_b, int phase,
                  int parity);
Amp dot(std::span<const Amp> a, std::span<const Amp> b);

}  // namespace omp

}  // namespace ghzqkd::kernels
