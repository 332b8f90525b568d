#pragma once

#include <utility>
#include <vector>

#include "ghzqkd/rng.hpp"
#include "ghzqkd/statevec.hpp"
#include "ghzqkd/types.hpp"

namespace ghzqkd {

// Hands out fresh Alice-owned ancilla labels; indices start high so they can
// never collide with protocol register labels.
class QubitIdAllocator {
  public:
    explicit QubitIdAllocator(int start = 1 << 20) : next_(start) {}
    QubitId next() { return alice_qubit(next_++); }

  private:
    int next_;
};

struct ResetAttempt {
    double ancilla_p{0.0};  // |p| of the control ancilla p|0> + q|1>
    double ancilla_q{0.0};
    int outcome{0};
    std::pair<double, double> pre_coeffs;   // (|alpha|, |beta|) before the attempt
    std::pair<double, double> post_coeffs;  // after measurement + X bookkeeping
};

struct ResetResult {
    std::vector<ResetAttempt> attempts;
    bool success{false};
    QubitId donated;  // ancilla now sitting where the measured qubit was
};

// Coefficients of a state expected to be alpha|0...0> + beta|1...1>.
struct TwoTermCoeffs {
    Amp c_zeros;
    Amp c_ones;
    double residual_sq{0.0};  // weight outside the two basis terms
};

TwoTermCoeffs two_term_coefficients(const QuantumState& state);

// |<GHZ_n|psi>|^2.
double verify_uniform_ghz(const QuantumState& state);

// One attempt of the ancilla-CNOT-measure procedure: prepare p|0> + q|1> with
// (p, q) matched to the current coefficients, CNOT onto `target`, measure and
// remove `target`. Outcome 0 leaves the survivors in the uniform GHZ state;
// outcome 1 squares the coefficient ratio, and the retry runs on the drifted
// state until max_retries. Throws Error(InvalidState) unless the state is a
// two-term superposition of all-zeros and all-ones over >= 2 qubits.
ResetResult reset_baseline(QuantumState& state, const QubitId& target, QubitIdAllocator& ancillas,
                           Rng& rng, int max_retries);

// Same attempt circuit, but a failed attempt is rolled back before the retry
// (simulation stand-in for the non-physical guaranteed reset), so attempts are
// i.i.d. with success probability 2 alpha^2 beta^2 and the attempt count is
// geometric. Throws Error(ResetFailed) if the bound is exceeded.
ResetResult reset_adaptive(QuantumState& state, const QubitId& target, QubitIdAllocator& ancillas,
                           Rng& rng, int max_attempts = 64);

}  // namespace ghzqkd
