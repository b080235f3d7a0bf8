#pragma once

#include <array>
#include <span>
#include <vector>

#include "qcap/pauli.hpp"

namespace qcap {

/// Per-qubit Pauli channel: probability 4-vector (I, X, Y, Z).
///
/// Construction rejects (rather than renormalizes) vectors whose components
/// leave [0, 1] or whose sum strays from 1 by more than 1e-12.
class PauliChannel {
  public:
    PauliChannel(double p_identity, double p_x, double p_y, double p_z);
    explicit PauliChannel(const std::array<double, 4>& probs);

    /// (f, g, g, g) with g = (1-f)/3.
    static PauliChannel depolarizing(double fidelity);

    const std::array<double, 4>& probs() const { return p_; }
    double prob(int pauli) const { return p_[static_cast<size_t>(pauli)]; }

    friend bool operator==(const PauliChannel&, const PauliChannel&) = default;

  private:
    std::array<double, 4> p_;
};

/// One channel per physical qubit.
using ChannelAssignment = std::vector<PauliChannel>;

ChannelAssignment uniform_assignment(int n, const PauliChannel& channel);

/// Probability that the channels apply exactly the error e: the product over
/// qubits of the component selected by e's letter. For a uniform
/// depolarizing assignment this is f^(n-wt) * g^wt.
double error_probability(std::span<const PauliChannel> assignment, const PauliOperator& e);

}  // namespace qcap
