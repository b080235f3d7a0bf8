#if defined(__x86_64__)

#include <immintrin.h>

#include <bit>
#include <cassert>
#include <stdexcept>

#include "qcap/kernels/enumeration_kernel.hpp"

namespace qcap::kernels {

namespace {

// Key contribution of a single x bit (sel = generator z masks) or z bit
// (sel = generator x masks); keys are GF(2)-linear in the error bits.
uint32_t bit_contribution(int q, const EnumerationTask& t, bool x_bit) {
    uint32_t key = 0;
    for (size_t i = 0; i < t.gen_x.size(); ++i) {
        const uint32_t mask = x_bit ? t.gen_z[i] : t.gen_x[i];
        key |= ((mask >> q) & 1u) << i;
    }
    const uint32_t lx = x_bit ? t.logical_x_z : t.logical_x_x;
    const uint32_t lz = x_bit ? t.logical_z_z : t.logical_z_x;
    key |= ((lx >> q) & 1u) << (t.n - 1);
    key |= ((lz >> q) & 1u) << t.n;
    return key;
}

void fill_key_table(const EnumerationTask& t, bool x_bit, std::vector<uint32_t>& table) {
    uint32_t contrib[32];
    for (int q = 0; q < t.n; ++q) contrib[q] = bit_contribution(q, t, x_bit);
    table[0] = 0;
    for (uint32_t v = 1; v < table.size(); ++v) {
        table[v] = table[v & (v - 1)] ^ contrib[std::countr_zero(v)];
    }
}

// Probability of the (x, z) bit pattern restricted to qubits [q0, q0+w).
void fill_prob_table(const EnumerationTask& t, int q0, int w, std::vector<double>& table) {
    static constexpr int kBitPairToPauli[4] = {0, 3, 1, 2};
    for (uint32_t xh = 0; xh < (uint32_t{1} << w); ++xh) {
        for (uint32_t zh = 0; zh < (uint32_t{1} << w); ++zh) {
            double prod = 1.0;
            for (int q = 0; q < w; ++q) {
                const uint32_t pair = (((xh >> q) & 1) << 1) | ((zh >> q) & 1);
                prod *= t.qubit_probs[static_cast<size_t>(q0 + q)]
                                     [static_cast<size_t>(kBitPairToPauli[pair])];
            }
            table[(size_t{xh} << w) | zh] = prod;
        }
    }
}

}  // namespace

void enumerate_avx2(const EnumerationTask& t, std::span<double> acc) {
    assert(acc.size() == t.buckets());
    if (t.fixed_qubits != 0 || t.n < 4) {
        throw std::invalid_argument("enumerate_avx2: needs n >= 4 and no fixed qubits");
    }
    const int n = t.n;
    const int h = n / 2, hi = n - h;
    const uint32_t lo_mask = (uint32_t{1} << h) - 1;

    std::vector<uint32_t> key_x(size_t{1} << n), key_z(size_t{1} << n);
    fill_key_table(t, true, key_x);
    fill_key_table(t, false, key_z);
    std::vector<double> prob_lo(size_t{1} << (2 * h));
    std::vector<double> prob_hi(size_t{1} << (2 * hi));
    fill_prob_table(t, 0, h, prob_lo);
    fill_prob_table(t, h, hi, prob_hi);

    std::vector<double> comp(acc.size(), 0.0);
    alignas(32) double pbuf[4];
    alignas(16) uint32_t kbuf[4];

    for (uint32_t x = 0; x < (uint32_t{1} << n); ++x) {
        const __m128i kx = _mm_set1_epi32(static_cast<int>(key_x[x]));
        const double* plo = &prob_lo[size_t{x & lo_mask} << h];
        const double* phi = &prob_hi[size_t{x >> h} << hi];
        for (uint32_t zh = 0; zh < (uint32_t{1} << hi); ++zh) {
            const __m256d vhi = _mm256_set1_pd(phi[zh]);
            const uint32_t zbase = zh << h;
            for (uint32_t zl = 0; zl < (uint32_t{1} << h); zl += 4) {
                const __m256d vp = _mm256_mul_pd(_mm256_loadu_pd(plo + zl), vhi);
                const __m128i vk = _mm_xor_si128(
                    _mm_loadu_si128(reinterpret_cast<const __m128i*>(&key_z[zbase + zl])), kx);
                _mm256_store_pd(pbuf, vp);
                _mm_store_si128(reinterpret_cast<__m128i*>(kbuf), vk);
                // Lane-order scatter keeps per-bucket accumulation order
                // identical to the z scan order.
                for (int lane = 0; lane < 4; ++lane) {
                    const uint32_t key = kbuf[lane];
                    const double y = pbuf[lane] - comp[key];
                    const double s = acc[key] + y;
                    comp[key] = (s - acc[key]) - y;
                    acc[key] = s;
                }
            }
        }
    }
}

}  // namespace qcap::kernels

#endif  // __x86_64__
