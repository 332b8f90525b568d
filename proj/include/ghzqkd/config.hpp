#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghzqkd/kernels.hpp"
#include "ghzqkd/types.hpp"

namespace ghzqkd {

enum class ResetStrategy : std::uint8_t { Baseline, Adaptive };
enum class EveKind : std::uint8_t { None, InterceptResend, EntangleAncilla, InterceptEntangleResend };

const char* to_string(ResetStrategy s);
const char* to_string(EveKind k);

struct EveOptions {
    EveKind kind{EveKind::None};
    MeasBasis basis{MeasBasis::Z};  // intercept-resend measurement basis
    int system_size{2};             // qubits in Eve's substitute register
};

// State vectors are capped at 2^20 amplitudes; longer keys go through block
// chaining in the harness.
inline constexpr int kMaxRegisterQubits = 20;

struct ProtocolConfig {
    int key_length{12};           // L
    double alpha0_sq{0.8};        // |alpha|^2 encoding classical 0; bit 1 uses 1 - alpha0_sq
    int qnd_shots{10000};
    double channel_loss_p{0.0};
    ResetStrategy reset_strategy{ResetStrategy::Adaptive};
    int receivers{1};             // n; 1 = two-party
    std::uint64_t seed{1};
    int max_transmit_attempts{1000};
    int reset_max_attempts{64};
    Backend backend{Backend::Parallel};

    // Throws Error(InvalidArgument) on any violated bound. alpha0_sq must be
    // strictly above 1/2 or the two encodings are indistinguishable.
    void validate() const;
};

// Scenario-level knobs layered on top of one exchange.
struct ScenarioConfig {
    ProtocolConfig protocol;
    EveOptions eve;
    int chsh_rounds{0};  // 0 = no CHSH test
    double chsh_threshold{2.5};
    int block_size{0};   // 0 = single block of key_length
    std::vector<int> key;  // explicit key bits; empty = drawn from seed
    double audit_tolerance{0.1};
    int sweep_repetitions{3};

    void validate() const;
};

}  // namespace ghzqkd
