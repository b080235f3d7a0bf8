#include "qcap/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qcap {

PauliOperator::PauliOperator(int n, uint32_t x_bits, uint32_t z_bits)
    : n_(n), x_(x_bits), z_(z_bits) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("PauliOperator: qubit count must be in [1, 32]");
    }
    if ((x_bits & ~qubit_mask(n)) != 0 || (z_bits & ~qubit_mask(n)) != 0) {
        throw std::invalid_argument("PauliOperator: bits set beyond qubit count");
    }
}

PauliOperator PauliOperator::identity(int n) {
    return PauliOperator(n, 0, 0);
}

PauliOperator PauliOperator::from_string(std::string_view s) {
    if (s.empty() || s.size() > static_cast<size_t>(kMaxQubits)) {
        throw std::invalid_argument("Pauli string must have 1 to 32 characters");
    }
    uint32_t x = 0, z = 0;
    for (size_t q = 0; q < s.size(); ++q) {
        switch (s[q]) {
            case 'I': break;
            case 'X': x |= uint32_t{1} << q; break;
            case 'Y': x |= uint32_t{1} << q; z |= uint32_t{1} << q; break;
            case 'Z': z |= uint32_t{1} << q; break;
            default:
                throw std::invalid_argument("Pauli string may only contain I, X, Y, Z");
        }
    }
    return PauliOperator(static_cast<int>(s.size()), x, z);
}

PauliOperator PauliOperator::single(int n, int qubit, char letter) {
    if (qubit < 1 || qubit > n) {
        throw std::invalid_argument("qubit index out of range");
    }
    std::string s(static_cast<size_t>(n), 'I');
    s[static_cast<size_t>(qubit - 1)] = letter;
    return from_string(s);
}

int PauliOperator::weight() const {
    return std::popcount(x_ | z_);
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("commutes_with: operators act on different qubit counts");
    }
    return ((std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) & 1) == 0;
}

PauliOperator PauliOperator::operator*(const PauliOperator& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("multiply: operators act on different qubit counts");
    }
    PauliOperator out;
    out.n_ = n_;
    out.x_ = x_ ^ other.x_;
    out.z_ = z_ ^ other.z_;
    return out;
}

std::string PauliOperator::str() const {
    std::string s(static_cast<size_t>(n_), 'I');
    for (int q = 0; q < n_; ++q) {
        const bool xb = (x_ >> q) & 1, zb = (z_ >> q) & 1;
        if (xb && zb) s[static_cast<size_t>(q)] = 'Y';
        else if (xb) s[static_cast<size_t>(q)] = 'X';
        else if (zb) s[static_cast<size_t>(q)] = 'Z';
    }
    return s;
}

}  // namespace qcap
