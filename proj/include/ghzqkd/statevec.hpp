#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzqkd/kernels.hpp"
#include "ghzqkd/rng.hpp"
#include "ghzqkd/types.hpp"

namespace ghzqkd {

using kernels::Backend;

// A gate instruction, used where operations are generated programmatically
// (randomized oracle programs, corrections applied from a table).
struct GateOp {
    enum class Kind : std::uint8_t { H, X, Z, Ry, Cnot };
    Kind kind{Kind::H};
    QubitId a;       // target (control for Cnot)
    QubitId b;       // Cnot target
    double angle{0}; // Ry only
};

// Dense state vector over n labeled qubits. Label order defines bit
// significance: labels()[0] is the most significant bit of the basis index.
// Every public operation leaves the L2 norm within 1e-10 of 1.
//
// Instances are single-threaded; parallelism lives inside the amplitude
// kernels of the selected backend.
class QuantumState {
  public:
    explicit QuantumState(std::vector<QubitId> labels, Backend backend = Backend::Parallel);

    // (|0...0> + |1...1>)/sqrt(2), built as H on the first qubit followed by a
    // CNOT chain so the construction itself is exercised, not just the target.
    static QuantumState ghz(std::span<const QubitId> owners, Backend backend = Backend::Parallel);

    static QuantumState single(QubitId id, Amp a0, Amp a1, Backend backend = Backend::Parallel);

    int num_qubits() const { return static_cast<int>(labels_.size()); }
    std::uint64_t dim() const { return amps_.size(); }
    const std::vector<QubitId>& labels() const { return labels_; }
    std::span<const Amp> amplitudes() const { return amps_; }
    Amp amplitude(std::uint64_t basis_index) const { return amps_[basis_index]; }
    bool has_qubit(const QubitId& q) const;
    Backend backend() const { return backend_; }

    void apply_h(const QubitId& q);
    void apply_x(const QubitId& q);
    void apply_z(const QubitId& q);
    void apply_ry(const QubitId& q, double theta);
    void apply_cnot(const QubitId& control, const QubitId& target);
    void apply(const GateOp& op);

    // Probability that `q` reads 0; does not modify the state.
    double marginal_prob0(const QubitId& q) const;

    MeasurementRecord measure_z(const QubitId& q, Rng& rng);
    // Forced projection; returns the Born probability of `outcome`.
    double collapse_z(const QubitId& q, int outcome);
    // Measures cos(angle) Z + sin(angle) X; angle 0 is Z, pi/2 is X.
    MeasurementRecord measure_in_basis(const QubitId& q, double angle, Rng& rng);

    // Drops a qubit whose marginal is deterministic (within 1e-10).
    void remove_qubit(const QubitId& q);

    // Bell-projection probabilities for (a, b), indexed Phi+, Phi-, Psi+, Psi-.
    std::array<double, 4> bell_probabilities(const QubitId& a, const QubitId& b) const;
    // Forced Bell projection: collapses (a, b) onto the given outcome and
    // removes both qubits. Returns the branch probability.
    double project_bell(const QubitId& a, const QubitId& b, const BsmOutcome& outcome);
    // Born-sampled Bell-state measurement; removes both qubits.
    BsmOutcome bsm(const QubitId& a, const QubitId& b, Rng& rng);

    // Tensor-extends the register; the new qubit becomes the least significant bit.
    void append_qubit(const QubitId& id, Amp a0 = Amp{1.0, 0.0}, Amp a1 = Amp{0.0, 0.0});
    void absorb(const QuantumState& other);
    void relabel(const QubitId& from, const QubitId& to);

    double norm_sq() const;
    // |<other|this>|^2; requires identical label sequences.
    double fidelity_with(const QuantumState& other) const;

  private:
    int bit_of(const QubitId& q) const;  // throws NotFound
    void renormalize(double norm_squared);

    std::vector<Amp> amps_;
    std::vector<QubitId> labels_;
    Backend backend_;
};

// Outcome order used by bell_probabilities / project_bell.
inline constexpr std::array<BsmOutcome, 4> kBellOutcomes = {
    BsmOutcome{0, 0}, BsmOutcome{1, 0}, BsmOutcome{0, 1}, BsmOutcome{1, 1}};

}  // namespace ghzqkd
