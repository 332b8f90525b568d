#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghzqkd {

using Amp = std::complex<double>;

// Tolerances used throughout: norms are kept within kNormTol of 1 by every
// public state operation; state-equality assertions go through fidelity and
// ignore global phase.
inline constexpr double kNormTol = 1e-10;
inline constexpr double kFidelityTol = 1e-9;

enum class Role : std::uint8_t { Alice, Bob, Eve };

// A logical qubit slot. `party` distinguishes Bob_1..Bob_n; it is 0 for
// Alice and Eve. (role, party, index) is unique within one simulation.
struct QubitId {
    Role role{Role::Alice};
    int party{0};
    int index{0};

    friend auto operator<=>(const QubitId&, const QubitId&) = default;
};

constexpr QubitId alice_qubit(int index) { return {Role::Alice, 0, index}; }
constexpr QubitId bob_qubit(int party, int index = 0) { return {Role::Bob, party, index}; }
constexpr QubitId eve_qubit(int index) { return {Role::Eve, 0, index}; }

std::string to_string(const QubitId& q);

// Two classical bits identifying a Bell state: (phase, parity) =
// (0,0) Phi+, (1,0) Phi-, (0,1) Psi+, (1,1) Psi-.
struct BsmOutcome {
    int bit_phase{0};
    int bit_parity{0};

    friend bool operator==(const BsmOutcome&, const BsmOutcome&) = default;
};

enum class MeasBasis : std::uint8_t { Z, X, Angle };

struct MeasurementRecord {
    QubitId qubit;
    MeasBasis basis{MeasBasis::Z};
    double angle{0.0};  // radians; 0 for Z, pi/2 for X
    int outcome{0};
    double probability{0.0};  // Born probability of `outcome` before collapse
};

enum class Errc {
    InvalidArgument,
    NotFound,
    PreconditionViolation,
    InvalidState,
    ProtocolExhausted,
    ResetFailed,
    InvalidReport,
    InvalidSequence,
    ConfigError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ghzqkd
