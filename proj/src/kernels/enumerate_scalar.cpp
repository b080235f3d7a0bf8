#include <bit>
#include <cassert>

#include "qcap/kernels/enumeration_kernel.hpp"

namespace qcap::kernels {

static constexpr int kBitPairToPauli[4] = {0, 3, 1, 2};

void enumerate_scalar(const EnumerationTask& t, std::span<double> acc) {
    assert(acc.size() == t.buckets());
    const int n = t.n;
    const int free_bits = n - t.fixed_qubits;
    const uint32_t free_count = uint32_t{1} << free_bits;
    const int gens = static_cast<int>(t.gen_x.size());

    // Per-qubit probabilities reindexed by the (x_bit, z_bit) pair.
    std::vector<std::array<double, 4>> bp(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        for (int pair = 0; pair < 4; ++pair) {
            bp[static_cast<size_t>(q)][static_cast<size_t>(pair)] =
                t.qubit_probs[static_cast<size_t>(q)][static_cast<size_t>(kBitPairToPauli[pair])];
        }
    }

    std::vector<double> comp(acc.size(), 0.0);
    for (uint32_t xf = 0; xf < free_count; ++xf) {
        const uint32_t x = (xf << t.fixed_qubits) | t.x_fixed;
        for (uint32_t zf = 0; zf < free_count; ++zf) {
            const uint32_t z = (zf << t.fixed_qubits) | t.z_fixed;

            uint32_t key = 0;
            for (int i = 0; i < gens; ++i) {
                const uint32_t bit =
                    (std::popcount(x & t.gen_z[static_cast<size_t>(i)]) ^
                     std::popcount(z & t.gen_x[static_cast<size_t>(i)])) & 1u;
                key |= bit << i;
            }
            const uint32_t anti_lx =
                (std::popcount(x & t.logical_x_z) ^ std::popcount(z & t.logical_x_x)) & 1u;
            const uint32_t anti_lz =
                (std::popcount(x & t.logical_z_z) ^ std::popcount(z & t.logical_z_x)) & 1u;
            key |= (anti_lx << (n - 1)) | (anti_lz << n);

            double prob = 1.0;
            for (int q = 0; q < n; ++q) {
                const uint32_t pair = (((x >> q) & 1) << 1) | ((z >> q) & 1);
                prob *= bp[static_cast<size_t>(q)][pair];
            }

            const double y = prob - comp[key];
            const double s = acc[key] + y;
            comp[key] = (s - acc[key]) - y;
            acc[key] = s;
        }
    }
}

}  // namespace qcap::kernels
