#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qcap/capacity.hpp"
#include "qcap/cat.hpp"

namespace qcap {

/// Distribution of conditional logical channels produced by decoding one
/// concatenation level: one outcome per distinct syndrome conditional,
/// weight = total probability of the syndromes producing it. The channel
/// 4-vector reads (Pr(Phi+|i), Pr(Psi+|i), Pr(Psi-|i), Pr(Phi-|i)) as the
/// logical (I, X, Y, Z) error probabilities.
struct ConditionalChannelEnsemble {
    std::vector<std::pair<double, PauliChannel>> outcomes;
    int qubits_per_logical = 1;  // physical qubits consumed per logical qubit

    double total_weight() const;
};

/// Conditions a code on its syndrome measurement: one outcome per nonzero
/// syndrome row of the joint distribution, with outcomes whose conditional
/// channels agree (componentwise, quantized at 1e-12) merged. Outcomes are
/// sorted by the quantized channel, so the result is deterministic.
ConditionalChannelEnsemble condition(const StabilizerCode& code,
                                     std::span<const PauliChannel> assignment,
                                     const EnumerationOptions& options = {});

/// One level of a concatenation scheme. permutation_symmetric marks codes
/// whose stabilizer structure is invariant under qubit permutation (cat and
/// rotated cat), enabling the multiset reduction of the tuple expansion.
struct ConcatLevel {
    StabilizerCode code;
    bool permutation_symmetric = false;
};

ConcatLevel cat_level(int p);
ConcatLevel rotated_cat_level(int p);
ConcatLevel custom_level(StabilizerCode code);

/// Feeds one ensemble per code position into a level: expands every
/// combination of per-position outcomes (tuple weight = product of member
/// weights), conditions the level's code on each combination, and merges
/// the results. For a permutation-symmetric code fed identical ensembles,
/// unordered multisets with multinomial weights replace the full tuple
/// expansion.
ConditionalChannelEnsemble apply_level(const ConcatLevel& level,
                                       std::span<const ConditionalChannelEnsemble> per_position,
                                       const EnumerationOptions& options = {});

/// Multi-level Q_SS of a concatenation scheme, levels listed innermost
/// first, over a depolarizing channel of fidelity f. The innermost level
/// conditions on the physical channel; each later level conditions on the
/// previous ensemble; the capacity is
///   (1 - E[h4(final conditional)]) / (product of level sizes),
/// with every level's syndrome record treated as known side information.
CapacityResult concatenated_qss(std::span<const ConcatLevel> levels, double f,
                                const EnumerationOptions& options = {});

/// Threshold of the 25-qubit double-cat scheme [rotated cat(5), cat(5)],
/// scanned over f in [0.79, 0.82].
double double_cat_threshold(const EnumerationOptions& options = {});

}  // namespace qcap
