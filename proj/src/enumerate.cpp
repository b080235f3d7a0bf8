#include "qcap/enumerate.hpp"

#include <future>
#include <ostream>
#include <stdexcept>

#include "qcap/kernels/enumeration_kernel.hpp"

namespace qcap {

namespace {

kernels::EnumerationTask make_task(const StabilizerCode& code,
                                   std::span<const PauliChannel> assignment) {
    kernels::EnumerationTask t;
    t.n = code.n;
    for (const auto& g : code.generators) {
        t.gen_x.push_back(g.x_bits());
        t.gen_z.push_back(g.z_bits());
    }
    t.logical_x_x = code.logical_x.x_bits();
    t.logical_x_z = code.logical_x.z_bits();
    t.logical_z_x = code.logical_z.x_bits();
    t.logical_z_z = code.logical_z.z_bits();
    for (const auto& ch : assignment) t.qubit_probs.push_back(ch.probs());
    return t;
}

kernels::EnumerationKernel select_kernel(const kernels::EnumerationTask& t,
                                         KernelBackend backend) {
#if defined(__x86_64__)
    const bool avx2_usable =
        kernels::avx2_available() && t.n >= 4 && t.fixed_qubits == 0;
    if (backend == KernelBackend::Avx2) {
        if (!avx2_usable) {
            throw std::invalid_argument(
                "avx2 backend unavailable (needs CPU support, n >= 4, no sharding)");
        }
        return kernels::enumerate_avx2;
    }
    if (backend == KernelBackend::Auto && avx2_usable) return kernels::enumerate_avx2;
#else
    if (backend == KernelBackend::Avx2) {
        throw std::invalid_argument("avx2 backend unavailable on this architecture");
    }
#endif
    return kernels::enumerate_scalar;
}

void check_inputs(const StabilizerCode& code, std::span<const PauliChannel> assignment,
                  const EnumerationOptions& options) {
    if (auto err = validate(code)) {
        throw std::invalid_argument("invalid stabilizer code: " + *err);
    }
    if (assignment.size() != static_cast<size_t>(code.n)) {
        throw std::invalid_argument("channel assignment length does not match block size");
    }
    if (code.n > options.max_qubits) {
        throw std::invalid_argument("block size " + std::to_string(code.n) +
                                    " exceeds the enumeration cap of " +
                                    std::to_string(options.max_qubits));
    }
    if (options.shards != 1 && options.shards != 16) {
        throw std::invalid_argument("shards must be 1 or 16");
    }
    if (options.shards == 16 && options.backend == KernelBackend::Avx2) {
        throw std::invalid_argument("sharded enumeration runs on the scalar kernel only");
    }
}

// Buckets are keyed (anti_lz << n) | (anti_lx << (n-1)) | syndrome; remap to
// the row-major (syndrome, class) table. Class from anticommutation bits:
// (0,0)->I, (1,0)->X, (1,1)->Y, (0,1)->Z.
JointDistribution remap(const std::vector<double>& buckets, int n) {
    static constexpr size_t kClassColumn[4] = {0, 3, 1, 2};  // index (anti_lz << 1) | anti_lx
    JointDistribution dist;
    dist.n = n;
    dist.table.assign(buckets.size(), 0.0);  // 2^(n-1) rows x 4 == 2^(n+1) buckets
    const uint32_t syndromes = uint32_t{1} << (n - 1);
    for (uint32_t key = 0; key < static_cast<uint32_t>(buckets.size()); ++key) {
        const uint32_t s = key & (syndromes - 1);
        const uint32_t anti_lx = (key >> (n - 1)) & 1;
        const uint32_t anti_lz = (key >> n) & 1;
        dist.table[size_t{s} * 4 + kClassColumn[(anti_lz << 1) | anti_lx]] = buckets[key];
    }
    return dist;
}

}  // namespace

double JointDistribution::syndrome_probability(uint32_t syndrome) const {
    const size_t base = size_t{syndrome} * 4;
    return table[base] + table[base + 1] + table[base + 2] + table[base + 3];
}

std::vector<double> JointDistribution::syndrome_marginals() const {
    std::vector<double> rows(num_syndromes());
    for (size_t i = 0; i < rows.size(); ++i) {
        rows[i] = syndrome_probability(static_cast<uint32_t>(i));
    }
    return rows;
}

double JointDistribution::total() const {
    double sum = 0.0, c = 0.0;
    for (double v : table) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

void JointDistribution::write_csv(std::ostream& out) const {
    out << "syndrome,phi_plus,psi_plus,psi_minus,phi_minus\n";
    const auto prec = out.precision(17);
    for (size_t i = 0; i < num_syndromes(); ++i) {
        out << i << ',' << table[i * 4] << ',' << table[i * 4 + 1] << ','
            << table[i * 4 + 2] << ',' << table[i * 4 + 3] << '\n';
    }
    out.precision(prec);
}

JointDistribution joint_distribution(const StabilizerCode& code,
                                     std::span<const PauliChannel> assignment,
                                     const EnumerationOptions& options) {
    check_inputs(code, assignment, options);
    const auto base_task = make_task(code, assignment);

    std::vector<double> buckets(base_task.buckets(), 0.0);
    if (options.shards == 1 || code.n < 2) {
        select_kernel(base_task, options.backend)(base_task, buckets);
        return remap(buckets, code.n);
    }

    // 16 shards: one per letter pair on qubits 1 and 2. Shard s pins
    // x bits to s & 3 and z bits to s >> 2.
    std::vector<std::future<std::vector<double>>> futures;
    for (int s = 0; s < 16; ++s) {
        kernels::EnumerationTask t = base_task;
        t.fixed_qubits = 2;
        t.x_fixed = static_cast<uint32_t>(s & 3);
        t.z_fixed = static_cast<uint32_t>(s >> 2);
        futures.push_back(std::async(std::launch::async, [t = std::move(t)]() {
            std::vector<double> shard(t.buckets(), 0.0);
            enumerate_scalar(t, shard);
            return shard;
        }));
    }
    for (auto& f : futures) {  // merged in shard-index order
        const auto shard = f.get();
        for (size_t k = 0; k < buckets.size(); ++k) buckets[k] += shard[k];
    }
    return remap(buckets, code.n);
}

double coset_probability(const StabilizerCode& code,
                         std::span<const PauliChannel> assignment,
                         const PauliOperator& representative,
                         const EnumerationOptions& options) {
    check_inputs(code, assignment, options);
    if (representative.num_qubits() != code.n) {
        throw std::invalid_argument("representative size does not match block size");
    }
    double sum = 0.0, c = 0.0;
    for (size_t subset = 0; subset < code.num_syndromes(); ++subset) {
        PauliOperator e = representative;
        for (size_t i = 0; i < code.generators.size(); ++i) {
            if ((subset >> i) & 1) e = e * code.generators[i];
        }
        const double y = error_probability(assignment, e) - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace qcap
