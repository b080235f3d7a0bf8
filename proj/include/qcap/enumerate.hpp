#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/stabilizer.hpp"

namespace qcap {

/// Joint probability table Pr(B_j, i) over syndrome i (rows) and Bell /
/// logical class j (columns Phi+, Psi+, Psi-, Phi-), i.e. the coset weight
/// polynomials of all 4 * 2^(n-1) stabilizer cosets evaluated at the
/// channel. Row sums are the syndrome marginals Pr(i); the grand total of a
/// valid table is 1.
struct JointDistribution {
    int n = 1;
    std::vector<double> table;  // num_syndromes x 4, row-major

    size_t num_syndromes() const { return table.size() / 4; }
    double entry(uint32_t syndrome, LogicalClass cls) const {
        return table[size_t{syndrome} * 4 + static_cast<size_t>(cls)];
    }
    double syndrome_probability(uint32_t syndrome) const;
    std::vector<double> syndrome_marginals() const;
    double total() const;

    /// CSV with header syndrome,phi_plus,psi_plus,psi_minus,phi_minus.
    void write_csv(std::ostream& out) const;
};

enum class KernelBackend {
    Auto,    // AVX2 when available and applicable, else scalar
    Scalar,
    Avx2,
};

struct EnumerationOptions {
    KernelBackend backend = KernelBackend::Auto;
    /// 1 or 16. With 16 shards the pass is split by the letters of the two
    /// leading qubits; shard tables are computed independently (scalar
    /// kernel, possibly concurrently) and added in shard-index order, so the
    /// result is bit-for-bit reproducible at a fixed shard count.
    int shards = 1;
    int max_qubits = 12;  // enumeration cap
};

/// Single pass over all 4^n errors in lexicographic (x_bits, z_bits) order,
/// accumulating error probabilities per (syndrome, class) cell with per-cell
/// compensated summation. Throws on an invalid code, a mismatched
/// assignment, or n above the cap.
JointDistribution joint_distribution(const StabilizerCode& code,
                                     std::span<const PauliChannel> assignment,
                                     const EnumerationOptions& options = {});

/// Probability of the coset {representative * s : s in the stabilizer
/// group}: a direct sum over the 2^(n-1) group elements, independent of the
/// enumeration kernels. Equals the joint_distribution entry at
/// (syndrome(rep), logical_class(rep)).
double coset_probability(const StabilizerCode& code,
                         std::span<const PauliChannel> assignment,
                         const PauliOperator& representative,
                         const EnumerationOptions& options = {});

}  // namespace qcap
