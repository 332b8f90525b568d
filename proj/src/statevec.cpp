#include "ghzqkd/statevec.hpp"

#include <algorithm>
#include <cmath>

namespace ghzqkd {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const kernels::Mat2 kHadamard{Amp{kInvSqrt2, 0}, Amp{kInvSqrt2, 0}, Amp{kInvSqrt2, 0},
                              Amp{-kInvSqrt2, 0}};

kernels::Mat2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {Amp{c, 0}, Amp{-s, 0}, Amp{s, 0}, Amp{c, 0}};
}

}  // namespace

std::string to_string(const QubitId& q) {
    switch (q.role) {
        case Role::Alice:
            return "A" + std::to_string(q.index);
        case Role::Bob:
            return "B" + std::to_string(q.party) + "." + std::to_string(q.index);
        case Role::Eve:
            return "E" + std::to_string(q.index);
    }
    return "?";
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidArgument: return "invalid-argument";
        case Errc::NotFound: return "not-found";
        case Errc::PreconditionViolation: return "precondition-violation";
        case Errc::InvalidState: return "invalid-state";
        case Errc::ProtocolExhausted: return "protocol-exhausted";
        case Errc::ResetFailed: return "reset-failed";
        case Errc::InvalidReport: return "invalid-report";
        case Errc::InvalidSequence: return "invalid-sequence";
        case Errc::ConfigError: return "config-error";
    }
    return "unknown";
}

QuantumState::QuantumState(std::vector<QubitId> labels, Backend backend)
    : labels_(std::move(labels)), backend_(backend) {
    if (labels_.empty()) raise(Errc::InvalidArgument, "register needs at least one qubit");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j])
                raise(Errc::InvalidArgument, "duplicate qubit label " + to_string(labels_[i]));
        }
    }
    amps_.assign(1ULL << labels_.size(), Amp{0.0, 0.0});
    amps_[0] = Amp{1.0, 0.0};
}

QuantumState QuantumState::ghz(std::span<const QubitId> owners, Backend backend) {
    if (owners.empty()) raise(Errc::InvalidArgument, "GHZ needs at least one qubit");
    QuantumState st(std::vector<QubitId>(owners.begin(), owners.end()), backend);
    st.apply_h(owners[0]);
    for (std::size_t i = 0; i + 1 < owners.size(); ++i) {
        st.apply_cnot(owners[i], owners[i + 1]);
    }
    return st;
}

QuantumState QuantumState::single(QubitId id, Amp a0, Amp a1, Backend backend) {
    QuantumState st(std::vector<QubitId>{id}, backend);
    st.amps_[0] = a0;
    st.amps_[1] = a1;
    const double n = st.norm_sq();
    if (std::abs(n - 1.0) > kNormTol) st.renormalize(n);
    return st;
}

bool QuantumState::has_qubit(const QubitId& q) const {
    return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

int QuantumState::bit_of(const QubitId& q) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == q) return static_cast<int>(labels_.size() - 1 - i);
    }
    raise(Errc::NotFound, "qubit " + to_string(q) + " not in register");
}

void QuantumState::renormalize(double norm_squared) {
    const double s = 1.0 / std::sqrt(norm_squared);
    if (backend_ == Backend::Serial)
        kernels::serial::scale(amps_, s);
    else
        kernels::omp::scale(amps_, s);
}

void QuantumState::apply_h(const QubitId& q) {
    const int bit = bit_of(q);
    if (backend_ == Backend::Serial)
        kernels::serial::apply_1q(amps_, bit, kHadamard);
    else
        kernels::omp::apply_1q(amps_, bit, kHadamard);
}

void QuantumState::apply_x(const QubitId& q) {
    const int bit = bit_of(q);
    if (backend_ == Backend::Serial)
        kernels::serial::apply_x(amps_, bit);
    else
        kernels::omp::apply_x(amps_, bit);
}

void QuantumState::apply_z(const QubitId& q) {
    const int bit = bit_of(q);
    if (backend_ == Backend::Serial)
        kernels::serial::apply_z(amps_, bit);
    else
        kernels::omp::apply_z(amps_, bit);
}

void QuantumState::apply_ry(const QubitId& q, double theta) {
    const int bit = bit_of(q);
    const kernels::Mat2 u = ry_matrix(theta);
    if (backend_ == Backend::Serial)
        kernels::serial::apply_1q(amps_, bit, u);
    else
        kernels::omp::apply_1q(amps_, bit, u);
}

void QuantumState::apply_cnot(const QubitId& control, const QubitId& target) {
    if (control == target) raise(Errc::InvalidArgument, "CNOT control equals target");
    const int cb = bit_of(control);
    const int tb = bit_of(target);
    if (backend_ == Backend::Serial)
        kernels::serial::apply_cnot(amps_, cb, tb);
    else
        kernels::omp::apply_cnot(amps_, cb, tb);
}

void QuantumState::apply(const GateOp& op) {
    switch (op.kind) {
        case GateOp::Kind::H: apply_h(op.a); break;
        case GateOp::Kind::X: apply_x(op.a); break;
        case GateOp::Kind::Z: apply_z(op.a); break;
        case GateOp::Kind::Ry: apply_ry(op.a, op.angle); break;
        case GateOp::Kind::Cnot: apply_cnot(op.a, op.b); break;
    }
}

double QuantumState::marginal_prob0(const QubitId& q) const {
    const int bit = bit_of(q);
    return backend_ == Backend::Serial ? kernels::serial::prob_zero(amps_, bit)
                                       : kernels::omp::prob_zero(amps_, bit);
}

double QuantumState::collapse_z(const QubitId& q, int outcome) {
    const int bit = bit_of(q);
    const double p0 = backend_ == Backend::Serial ? kernels::serial::prob_zero(amps_, bit)
                                                  : kernels::omp::prob_zero(amps_, bit);
    const double p = outcome == 0 ? p0 : 1.0 - p0;
    if (p <= 0.0)
        raise(Errc::PreconditionViolation,
              "cannot collapse " + to_string(q) + " onto a zero-probability outcome");
    const double rescale = 1.0 / std::sqrt(p);
    if (backend_ == Backend::Serial)
        kernels::serial::collapse(amps_, bit, outcome, rescale);
    else
        kernels::omp::collapse(amps_, bit, outcome, rescale);
    return p;
}

MeasurementRecord QuantumState::measure_z(const QubitId& q, Rng& rng) {
    const double p0 = marginal_prob0(q);
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    const double p = collapse_z(q, outcome);
    return {q, MeasBasis::Z, 0.0, outcome, p};
}

MeasurementRecord QuantumState::measure_in_basis(const QubitId& q, double angle, Rng& rng) {
    apply_ry(q, -angle);
    MeasurementRecord rec = measure_z(q, rng);
    rec.angle = angle;
    rec.basis = angle == 0.0 ? MeasBasis::Z
                             : (angle == 1.5707963267948966 ? MeasBasis::X : MeasBasis::Angle);
    return rec;
}

void QuantumState::remove_qubit(const QubitId& q) {
    if (labels_.size() < 2) raise(Errc::InvalidState, "cannot remove the last qubit");
    const int bit = bit_of(q);
    const double p0 = marginal_prob0(q);
    if (p0 > kNormTol && p0 < 1.0 - kNormTol)
        raise(Errc::PreconditionViolation,
              "qubit " + to_string(q) + " still entangled (p0=" + std::to_string(p0) + ")");
    const int value = p0 > 0.5 ? 0 : 1;
    std::vector<Amp> next(amps_.size() >> 1);
    if (backend_ == Backend::Serial)
        kernels::serial::compact_bit(amps_, next, bit, value);
    else
        kernels::omp::compact_bit(amps_, next, bit, value);
    amps_ = std::move(next);
    labels_.erase(labels_.begin() + (static_cast<int>(labels_.size()) - 1 - bit));
    const double n = norm_sq();
    if (std::abs(n - 1.0) > kNormTol) renormalize(n);
}

std::array<double, 4> QuantumState::bell_probabilities(const QubitId& a, const QubitId& b) const {
    if (a == b) raise(Errc::InvalidArgument, "Bell measurement needs two distinct qubits");
    const int ba = bit_of(a);
    const int bb = bit_of(b);
    std::array<double, 4> probs{};
    std::vector<Amp> scratch(amps_.size() >> 2);
    for (int k = 0; k < 4; ++k) {
        const BsmOutcome& o = kBellOutcomes[k];
        if (backend_ == Backend::Serial) {
            kernels::serial::bell_project(amps_, scratch, ba, bb, o.bit_phase, o.bit_parity);
            probs[k] = kernels::serial::norm_sq(scratch);
        } else {
            kernels::omp::bell_project(amps_, scratch, ba, bb, o.bit_phase, o.bit_parity);
            probs[k] = kernels::omp::norm_sq(scratch);
        }
    }
    return probs;
}

double QuantumState::project_bell(const QubitId& a, const QubitId& b, const BsmOutcome& outcome) {
    if (a == b) raise(Errc::InvalidArgument, "Bell measurement needs two distinct qubits");
    if (labels_.size() < 3)
        raise(Errc::InvalidState, "Bell projection would empty the register");
    const int ba = bit_of(a);
    const int bb = bit_of(b);
    std::vector<Amp> next(amps_.size() >> 2);
    double p;
    if (backend_ == Backend::Serial) {
        kernels::serial::bell_project(amps_, next, ba, bb, outcome.bit_phase, outcome.bit_parity);
        p = kernels::serial::norm_sq(next);
    } else {
        kernels::omp::bell_project(amps_, next, ba, bb, outcome.bit_phase, outcome.bit_parity);
        p = kernels::omp::norm_sq(next);
    }
    if (p <= 1e-15)
        raise(Errc::PreconditionViolation, "Bell branch has zero probability");
    amps_ = std::move(next);
    const int idx_a = static_cast<int>(labels_.size()) - 1 - ba;
    const int idx_b = static_cast<int>(labels_.size()) - 1 - bb;
    labels_.erase(labels_.begin() + std::max(idx_a, idx_b));
    labels_.erase(labels_.begin() + std::min(idx_a, idx_b));
    renormalize(p);
    return p;
}

BsmOutcome QuantumState::bsm(const QubitId& a, const QubitId& b, Rng& rng) {
    const std::array<double, 4> probs = bell_probabilities(a, b);
    const double u = rng.uniform();
    double acc = 0.0;
    int pick = 3;
    for (int k = 0; k < 4; ++k) {
        acc += probs[k];
        if (u < acc) {
            pick = k;
            break;
        }
    }
    project_bell(a, b, kBellOutcomes[pick]);
    return kBellOutcomes[pick];
}

void QuantumState::append_qubit(const QubitId& id, Amp a0, Amp a1) {
    if (has_qubit(id)) raise(Errc::InvalidArgument, "label " + to_string(id) + " already present");
    std::vector<Amp> next(amps_.size() << 1);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        next[(i << 1)] = amps_[i] * a0;
        next[(i << 1) | 1] = amps_[i] * a1;
    }
    amps_ = std::move(next);
    labels_.push_back(id);
    const double n = norm_sq();
    if (std::abs(n - 1.0) > kNormTol) renormalize(n);
}

void QuantumState::absorb(const QuantumState& other) {
    for (const QubitId& q : other.labels_) {
        if (has_qubit(q)) raise(Errc::InvalidArgument, "label " + to_string(q) + " already present");
    }
    std::vector<Amp> next(amps_.size() * other.amps_.size());
    const std::uint64_t d2 = other.amps_.size();
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        for (std::uint64_t j = 0; j < d2; ++j) {
            next[i * d2 + j] = amps_[i] * other.amps_[j];
        }
    }
    amps_ = std::move(next);
    labels_.insert(labels_.end(), other.labels_.begin(), other.labels_.end());
}

void QuantumState::relabel(const QubitId& from, const QubitId& to) {
    if (has_qubit(to)) raise(Errc::InvalidArgument, "label " + to_string(to) + " already present");
    for (QubitId& q : labels_) {
        if (q == from) {
            q = to;
            return;
        }
    }
    raise(Errc::NotFound, "qubit " + to_string(from) + " not in register");
}

double QuantumState::norm_sq() const {
    return backend_ == Backend::Serial ? kernels::serial::norm_sq(amps_)
                                       : kernels::omp::norm_sq(amps_);
}

double QuantumState::fidelity_with(const QuantumState& other) const {
    if (labels_ != other.labels_)
        raise(Errc::InvalidArgument, "fidelity requires identical label sequences");
    const Amp d = backend_ == Backend::Serial ? kernels::serial::dot(other.amps_, amps_)
                                              : kernels::omp::dot(other.amps_, amps_);
    return std::norm(d);
}

}  // namespace ghzqkd
