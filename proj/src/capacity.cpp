#include "qcap/capacity.hpp"

#include <cmath>
#include <stdexcept>

namespace qcap {

namespace {

struct KahanSum {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double entropy_term(double x) {
    return x > 0.0 ? -x * std::log2(x) : 0.0;
}

}  // namespace

double entropy(std::span<const double> xs, bool require_normalized) {
    KahanSum h, total;
    for (double x : xs) {
        if (x < 0.0) throw std::invalid_argument("entropy: negative probability");
        h.add(entropy_term(x));
        total.add(x);
    }
    if (require_normalized && std::abs(total.sum - 1.0) > 1e-9) {
        throw std::invalid_argument("entropy: probabilities sum to " +
                                    std::to_string(total.sum) + ", not 1");
    }
    return h.sum;
}

double hashing_capacity(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("hashing_capacity: fidelity must lie in [0, 1]");
    }
    const double g = (1.0 - fidelity) / 3.0;
    return 1.0 - (entropy_term(fidelity) + 3.0 * entropy_term(g));
}

CapacityResult shor_smolin_capacity(const JointDistribution& dist, int p) {
    if (p < 1) throw std::invalid_argument("block size must be positive");
    if (std::abs(dist.total() - 1.0) > 1e-9) {
        throw std::invalid_argument("shor_smolin_capacity: unnormalized table");
    }
    const auto rows = dist.syndrome_marginals();
    const double h_syndrome = entropy(rows);
    const double h_joint = entropy(dist.table);

    // Conditional route for S_X2: average of the per-syndrome Bell
    // entropies, weighted by the syndrome marginals.
    KahanSum s_x2;
    for (size_t i = 0; i < rows.size(); ++i) {
        const double w = rows[i];
        if (w <= 0.0) continue;
        double h4 = 0.0;
        for (size_t j = 0; j < 4; ++j) {
            h4 += entropy_term(dist.table[i * 4 + j] / w);
        }
        s_x2.add(w * h4);
    }
    if (std::abs(s_x2.sum - (h_joint - h_syndrome)) > 1e-12) {
        throw std::logic_error("S_X2 routes disagree beyond 1e-12");
    }

    CapacityResult r;
    r.q_ss = (1.0 + h_syndrome - h_joint) / p;
    r.s_x2 = s_x2.sum;
    r.h_syndrome = h_syndrome;
    r.h_joint = h_joint;
    r.p = p;
    return r;
}

double coherent_information(const JointDistribution& dist, int p) {
    if (p < 1) throw std::invalid_argument("block size must be positive");
    if (std::abs(dist.total() - 1.0) > 1e-9) {
        throw std::invalid_argument("coherent_information: unnormalized table");
    }
    // rho_Q is diagonal with two equal entries Pr(i)/2 per syndrome space.
    std::vector<double> q_spectrum;
    q_spectrum.reserve(dist.num_syndromes() * 2);
    for (size_t i = 0; i < dist.num_syndromes(); ++i) {
        const double half = dist.syndrome_probability(static_cast<uint32_t>(i)) / 2.0;
        q_spectrum.push_back(half);
        q_spectrum.push_back(half);
    }
    const double s_q = entropy(q_spectrum);
    const double s_rq = entropy(dist.table);
    return (s_q - s_rq) / p;
}

std::vector<std::pair<double, double>> capacity_sign_changes(
    const std::function<double(double)>& capacity_of_f, const ThresholdOptions& options) {
    if (!(options.f_lo < options.f_hi) || options.scan_step <= 0.0) {
        throw std::invalid_argument("threshold: invalid bracket or scan step");
    }
    auto negative = [&](double f) { return capacity_of_f(f) < 0.0; };
    std::vector<std::pair<double, double>> changes;
    double f_prev = options.f_lo;
    bool neg_prev = negative(f_prev);
    for (int k = 1;; ++k) {
        double f = options.f_lo + k * options.scan_step;
        if (f > options.f_hi) f = options.f_hi;
        const bool neg = negative(f);
        if (neg != neg_prev) changes.emplace_back(f_prev, f);
        if (f >= options.f_hi) break;
        f_prev = f;
        neg_prev = neg;
    }
    return changes;
}

double threshold(const std::function<double(double)>& capacity_of_f,
                 const ThresholdOptions& options) {
    const auto changes = capacity_sign_changes(capacity_of_f, options);
    if (changes.empty()) {
        throw std::runtime_error("threshold: no sign change in [" +
                                 std::to_string(options.f_lo) + ", " +
                                 std::to_string(options.f_hi) + "]");
    }
    auto [lo, hi] = changes.back();
    const bool neg_lo = capacity_of_f(lo) < 0.0;
    while (hi - lo > options.tol) {
        const double mid = (lo + hi) / 2.0;
        if ((capacity_of_f(mid) < 0.0) == neg_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

}  // namespace qcap
