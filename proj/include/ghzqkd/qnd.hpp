#pragma once

#include "ghzqkd/rng.hpp"
#include "ghzqkd/statevec.hpp"
#include "ghzqkd/types.hpp"

namespace ghzqkd {

struct QndEstimate {
    double p0_hat{0.0};
    int shots{0};
    int decoded_bit{0};  // 0 iff p0_hat > 0.5; a tie decodes to 1
    double margin{0.0};  // |p0_hat - 0.5|
};

// Non-demolition readout model: the state is read, never written. Shot noise
// is the only error source; p0_hat is Binomial(shots, marginal)/shots.
QndEstimate qnd_estimate(const QuantumState& state, const QubitId& qubit, int shots, Rng& rng);

// Smallest shot count s with exp(-2 s (alpha0_sq - 1/2)^2) <= target_error.
// Rejects margins below 0.01, where the bound diverges uselessly.
int required_shots(double alpha0_sq, double target_error);

}  // namespace ghzqkd
