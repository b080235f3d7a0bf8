#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qcap {

inline constexpr int kMaxQubits = 32;

/// Bit mask covering the low `n` bits (n in [0, 32]).
constexpr uint32_t qubit_mask(int n) {
    return n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
}

/// An n-qubit Pauli operator modulo phase, stored as paired X/Z bit masks.
///
/// Qubit 1 is the leftmost character of the string form and bit 0 of the
/// masks. Bit q of x_bits is set iff qubit q+1 carries sigma_x or sigma_y;
/// bit q of z_bits is set iff it carries sigma_z or sigma_y. Phases (+-1,
/// +-i) are not represented, so multiplication is componentwise XOR.
class PauliOperator {
  public:
    PauliOperator() = default;
    PauliOperator(int n, uint32_t x_bits, uint32_t z_bits);

    static PauliOperator identity(int n);
    static PauliOperator from_string(std::string_view s);
    /// Single-letter operator on one qubit (1-based), identity elsewhere.
    static PauliOperator single(int n, int qubit, char letter);

    int num_qubits() const { return n_; }
    uint32_t x_bits() const { return x_; }
    uint32_t z_bits() const { return z_; }

    /// Number of qubits carrying sigma_x, sigma_y or sigma_z.
    int weight() const;
    bool is_identity() const { return (x_ | z_) == 0; }

    /// True iff the symplectic product is zero. Throws on mismatched sizes.
    bool commutes_with(const PauliOperator& other) const;

    /// Product with the phase discarded (XOR of both masks).
    PauliOperator operator*(const PauliOperator& other) const;

    std::string str() const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  private:
    int n_ = 1;
    uint32_t x_ = 0;
    uint32_t z_ = 0;
};

}  // namespace qcap
