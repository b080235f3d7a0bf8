#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcap/pauli.hpp"

namespace qcap {

/// Logical action of an error on the coded qubit, equivalently which Bell
/// state survives: I -> Phi+, X -> Psi+, Y -> Psi-, Z -> Phi-.
enum class LogicalClass : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(LogicalClass c);

/// An [n, k=1] additive code: n-1 commuting independent stabilizer
/// generators plus a logical X/Z representative pair.
///
/// This is a plain value type; construction does not enforce the code
/// invariants. Use validate() to obtain the first violation, if any.
/// Conventions: syndrome bit i is 1 iff the error anticommutes with
/// generators[i], with bit 0 least significant.
struct StabilizerCode {
    int n = 1;
    std::vector<PauliOperator> generators;
    PauliOperator logical_x = PauliOperator::from_string("X");
    PauliOperator logical_z = PauliOperator::from_string("Z");

    size_t num_syndromes() const { return size_t{1} << generators.size(); }

    uint32_t syndrome(const PauliOperator& e) const;
    LogicalClass logical_class(const PauliOperator& e) const;
};

/// Checks commutativity, independence and the logical-operator relations.
/// Returns std::nullopt when the code is valid, else the first violation.
std::optional<std::string> validate(const StabilizerCode& code);

/// Completes a valid generator set to a full code via symplectic GF(2)
/// linear algebra. Returns {logical_x, logical_z}: a pair commuting with
/// every generator, mutually anticommuting, neither in the stabilizer
/// group. Representatives are coset-minimal and deterministic; when a
/// pure-Z (resp. pure-X) class exists it is assigned to logical_z (resp.
/// logical_x). Throws std::invalid_argument on an invalid generator set.
std::pair<PauliOperator, PauliOperator> derive_logicals(
    int n, std::span<const PauliOperator> generators);

/// Minimum weight over operators that commute with every generator but lie
/// outside the stabilizer group. Guarded at max_qubits (default 12).
int min_distance(const StabilizerCode& code, int max_qubits = 12);

/// Draws n-1 independent commuting generators uniformly (resampling on
/// dependent or anticommuting draws) and derives logicals. 2 <= n <= 12.
StabilizerCode sample_stabilizer_code(int n, std::mt19937_64& rng);
StabilizerCode random_stabilizer_code(int n, uint64_t seed);

}  // namespace qcap
