#include "qcap/concat.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qcap {

namespace {

constexpr double kMergeQuantum = 1e-12;
constexpr size_t kMaxExpansions = 1u << 22;

using ChannelKey = std::array<int64_t, 4>;

ChannelKey quantize(const std::array<double, 4>& probs) {
    ChannelKey key;
    for (size_t i = 0; i < 4; ++i) key[i] = llround(probs[i] / kMergeQuantum);
    return key;
}

// Accumulates (weight, channel) outcomes, merging on the quantized channel.
// The first full-precision channel seen for a key is kept.
class EnsembleBuilder {
  public:
    void add(double weight, const std::array<double, 4>& channel) {
        auto it = merged_.try_emplace(quantize(channel), 0.0, channel).first;
        it->second.first += weight;
    }

    ConditionalChannelEnsemble take(int qubits_per_logical) {
        ConditionalChannelEnsemble out;
        out.qubits_per_logical = qubits_per_logical;
        out.outcomes.reserve(merged_.size());
        for (const auto& [key, wc] : merged_) {
            out.outcomes.emplace_back(wc.first, PauliChannel(wc.second));
        }
        return out;
    }

  private:
    std::map<ChannelKey, std::pair<double, std::array<double, 4>>> merged_;
};

void add_conditioned(EnsembleBuilder& builder, double scale, const StabilizerCode& code,
                     std::span<const PauliChannel> assignment,
                     const EnumerationOptions& options) {
    const JointDistribution dist = joint_distribution(code, assignment, options);
    for (size_t i = 0; i < dist.num_syndromes(); ++i) {
        const double w = dist.syndrome_probability(static_cast<uint32_t>(i));
        if (w <= 0.0) continue;
        std::array<double, 4> cond;
        for (size_t j = 0; j < 4; ++j) cond[j] = dist.table[i * 4 + j] / w;
        builder.add(scale * w, cond);
    }
}

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

double entropy_term(double x) {
    return x > 0.0 ? -x * std::log2(x) : 0.0;
}

struct KahanSum {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double ConditionalChannelEnsemble::total_weight() const {
    KahanSum w;
    for (const auto& [weight, channel] : outcomes) w.add(weight);
    return w.sum;
}

ConditionalChannelEnsemble condition(const StabilizerCode& code,
                                     std::span<const PauliChannel> assignment,
                                     const EnumerationOptions& options) {
    EnsembleBuilder builder;
    add_conditioned(builder, 1.0, code, assignment, options);
    return builder.take(code.n);
}

ConcatLevel cat_level(int p) {
    return ConcatLevel{cat_code(p), true};
}

ConcatLevel rotated_cat_level(int p) {
    return ConcatLevel{rotated_cat_code(p), true};
}

ConcatLevel custom_level(StabilizerCode code) {
    return ConcatLevel{std::move(code), false};
}

ConditionalChannelEnsemble apply_level(const ConcatLevel& level,
                                       std::span<const ConditionalChannelEnsemble> per_position,
                                       const EnumerationOptions& options) {
    const int n = level.code.n;
    if (per_position.size() != static_cast<size_t>(n)) {
        throw std::invalid_argument("apply_level: need one ensemble per code position");
    }
    if (n > options.max_qubits) {
        throw std::invalid_argument("apply_level: level block size " + std::to_string(n) +
                                    " exceeds the enumeration cap");
    }
    const int inner_qubits = per_position[0].qubits_per_logical;
    bool all_equal = true;
    for (const auto& ens : per_position) {
        if (ens.qubits_per_logical != inner_qubits) {
            throw std::invalid_argument("apply_level: positions consume different qubit counts");
        }
        all_equal = all_equal && ens.outcomes.size() == per_position[0].outcomes.size();
    }
    if (all_equal) {
        for (const auto& ens : per_position) {
            for (size_t i = 0; all_equal && i < ens.outcomes.size(); ++i) {
                all_equal = ens.outcomes[i].first == per_position[0].outcomes[i].first &&
                            ens.outcomes[i].second == per_position[0].outcomes[i].second;
            }
        }
    }

    EnsembleBuilder builder;
    std::vector<PauliChannel> assignment;
    assignment.reserve(static_cast<size_t>(n));

    if (level.permutation_symmetric && all_equal) {
        // Unordered multisets of outcomes with multinomial weights; valid
        // because permuting the code's qubits permutes syndrome rows without
        // changing the outcome multiset.
        const auto& outcomes = per_position[0].outcomes;
        const size_t k = outcomes.size();
        std::vector<size_t> sel(static_cast<size_t>(n), 0);  // non-decreasing indices
        size_t expansions = 0;
        while (true) {
            if (++expansions > kMaxExpansions) {
                throw std::invalid_argument("apply_level: multiset expansion too large");
            }
            double weight = static_cast<double>(factorial(n));
            size_t run = 1;
            for (size_t j = 0; j < sel.size(); ++j) {
                weight *= outcomes[sel[j]].first;
                if (j > 0 && sel[j] == sel[j - 1]) {
                    weight /= static_cast<double>(++run);
                } else {
                    run = 1;
                }
            }
            assignment.clear();
            for (size_t idx : sel) assignment.push_back(outcomes[idx].second);
            add_conditioned(builder, weight, level.code, assignment, options);

            int i = n - 1;
            while (i >= 0 && sel[static_cast<size_t>(i)] == k - 1) --i;
            if (i < 0) break;
            const size_t next = sel[static_cast<size_t>(i)] + 1;
            for (size_t j = static_cast<size_t>(i); j < sel.size(); ++j) sel[j] = next;
        }
    } else {
        size_t combos = 1;
        for (const auto& ens : per_position) {
            combos *= ens.outcomes.size();
            if (combos > kMaxExpansions) {
                throw std::invalid_argument("apply_level: tuple expansion too large");
            }
        }
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        while (true) {
            double weight = 1.0;
            assignment.clear();
            for (size_t j = 0; j < idx.size(); ++j) {
                const auto& [w, ch] = per_position[j].outcomes[idx[j]];
                weight *= w;
                assignment.push_back(ch);
            }
            add_conditioned(builder, weight, level.code, assignment, options);

            int j = n - 1;
            while (j >= 0 && ++idx[static_cast<size_t>(j)] ==
                                 per_position[static_cast<size_t>(j)].outcomes.size()) {
                idx[static_cast<size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }
    return builder.take(n * inner_qubits);
}

CapacityResult concatenated_qss(std::span<const ConcatLevel> levels, double f,
                                const EnumerationOptions& options) {
    if (levels.empty()) {
        throw std::invalid_argument("concatenated_qss: empty level list");
    }
    const int n0 = levels[0].code.n;
    const auto physical = uniform_assignment(n0, PauliChannel::depolarizing(f));
    ConditionalChannelEnsemble ensemble = condition(levels[0].code, physical, options);
    for (size_t lvl = 1; lvl < levels.size(); ++lvl) {
        const std::vector<ConditionalChannelEnsemble> positions(
            static_cast<size_t>(levels[lvl].code.n), ensemble);
        ensemble = apply_level(levels[lvl], positions, options);
    }

    const int total_qubits = ensemble.qubits_per_logical;
    if (std::abs(ensemble.total_weight() - 1.0) > 1e-9) {
        throw std::logic_error("concatenated_qss: outcome weights do not sum to 1");
    }

    KahanSum s_x2, h_record, h_joint;
    for (const auto& [w, ch] : ensemble.outcomes) {
        double h4 = 0.0;
        for (double c : ch.probs()) {
            h4 += entropy_term(c);
            h_joint.add(entropy_term(w * c));
        }
        s_x2.add(w * h4);
        h_record.add(entropy_term(w));
    }

    CapacityResult out;
    out.q_ss = (1.0 - s_x2.sum) / total_qubits;
    out.s_x2 = s_x2.sum;
    out.h_syndrome = h_record.sum;  // entropies over the merged outcome record
    out.h_joint = h_joint.sum;
    out.p = total_qubits;
    return out;
}

double double_cat_threshold(const EnumerationOptions& options) {
    const std::vector<ConcatLevel> levels{rotated_cat_level(5), cat_level(5)};
    ThresholdOptions topts;
    topts.f_lo = 0.79;
    topts.f_hi = 0.82;
    return threshold([&](double f) { return concatenated_qss(levels, f, options).q_ss; },
                     topts);
}

}  // namespace qcap
