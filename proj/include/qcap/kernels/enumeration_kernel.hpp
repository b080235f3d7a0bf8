#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace qcap::kernels {

/// Flattened inputs for one coset-enumeration pass. All masks use bit q for
/// qubit q+1. The kernels scan every error (x, z) in lexicographic (x, z)
/// order -- optionally restricted to a shard that pins the letters of the
/// leading `fixed_qubits` qubits -- and accumulate each error's probability
/// into one bucket per (class bits, syndrome) key:
///
///   key = (anti_lz << n) | (anti_lx << (n-1)) | syndrome
///
/// where anti_lz / anti_lx are the anticommutation bits against the logical
/// representatives and syndrome bit i is the anticommutation bit against
/// generator i. Buckets use Kahan-compensated accumulation, so a kernel's
/// output is bit-for-bit reproducible.
struct EnumerationTask {
    int n = 1;
    std::vector<uint32_t> gen_x, gen_z;  // n-1 generator masks
    uint32_t logical_x_x = 0, logical_x_z = 0;
    uint32_t logical_z_x = 0, logical_z_z = 0;
    std::vector<std::array<double, 4>> qubit_probs;  // (I, X, Y, Z) per qubit

    int fixed_qubits = 0;  // shard: pin letters of qubits 1..fixed_qubits
    uint32_t x_fixed = 0, z_fixed = 0;

    size_t buckets() const { return size_t{2} << n; }
};

/// Reference kernel: per-error popcount parities and a per-qubit
/// probability product. Handles any task.
void enumerate_scalar(const EnumerationTask& task, std::span<double> acc);

#if defined(__x86_64__)
/// AVX2 variant: XOR-linear key tables plus half-split probability tables,
/// batched four errors at a time. Requires n >= 4 and fixed_qubits == 0;
/// call avx2_available() before dispatching. Agrees with the scalar kernel
/// to floating-point reassociation error (equivalence-tested).
void enumerate_avx2(const EnumerationTask& task, std::span<double> acc);
#endif

/// True when the running CPU supports AVX2.
bool avx2_available();

using EnumerationKernel = void (*)(const EnumerationTask&, std::span<double>);

}  // namespace qcap::kernels
