#pragma once

#include <cstdint>
#include <vector>

namespace ghzqkd {

enum class MsgKind : std::uint8_t {
    BsmResult,
    ResetNotice,
    ChshRequest,
    ChshSettings,
    ChshOutcome,
    Done,
};

const char* to_string(MsgKind k);

// One classical-channel message. BsmResult payload is exactly the two outcome
// bits (phase, parity); ResetNotice carries (success, attempts).
struct ClassicalMessage {
    MsgKind kind{MsgKind::Done};
    int round{0};
    std::vector<double> payload;

    friend bool operator==(const ClassicalMessage&, const ClassicalMessage&) = default;
};

// Bits charged to the classical-cost accounting for one message.
int payload_bits(const ClassicalMessage& msg);

}  // namespace ghzqkd
