#include "qcap/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qcap {

// Letter index (I,X,Y,Z) from the (x_bit, z_bit) pair packed as (x << 1) | z.
static constexpr int kBitPairToPauli[4] = {0, 3, 1, 2};

PauliChannel::PauliChannel(double p_identity, double p_x, double p_y, double p_z)
    : PauliChannel(std::array<double, 4>{p_identity, p_x, p_y, p_z}) {}

PauliChannel::PauliChannel(const std::array<double, 4>& probs) : p_(probs) {
    double sum = 0.0;
    for (double p : p_) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("PauliChannel: components must lie in [0, 1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("PauliChannel: components must sum to 1 (got " +
                                    std::to_string(sum) + "); refusing to renormalize");
    }
}

PauliChannel PauliChannel::depolarizing(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("depolarizing: fidelity must lie in [0, 1]");
    }
    const double g = (1.0 - fidelity) / 3.0;
    return PauliChannel(fidelity, g, g, g);
}

ChannelAssignment uniform_assignment(int n, const PauliChannel& channel) {
    return ChannelAssignment(static_cast<size_t>(n), channel);
}

double error_probability(std::span<const PauliChannel> assignment, const PauliOperator& e) {
    if (assignment.size() != static_cast<size_t>(e.num_qubits())) {
        throw std::invalid_argument("error_probability: assignment length does not match error");
    }
    double prod = 1.0;
    for (int q = 0; q < e.num_qubits(); ++q) {
        const int pair = (((e.x_bits() >> q) & 1) << 1) | ((e.z_bits() >> q) & 1);
        prod *= assignment[static_cast<size_t>(q)].prob(kBitPairToPauli[pair]);
    }
    return prod;
}

}  // namespace qcap
