#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qcap/enumerate.hpp"

namespace qcap {

/// Base-2 entropy -sum x log2 x with 0 log 0 := 0. Throws on negative
/// entries; when require_normalized (the default) the sum must be within
/// 1e-9 of 1.
double entropy(std::span<const double> xs, bool require_normalized = true);

/// Q_H = 1 - S_W(f): the random-additive-code (one-way hashing) rate of the
/// depolarizing channel, S_W = -f log2 f - 3 g log2 g.
double hashing_capacity(double fidelity);

struct CapacityResult {
    double q_ss = 0.0;        // qubits per channel use
    double s_x2 = 0.0;        // average conditional Bell entropy
    double h_syndrome = 0.0;  // entropy of the syndrome marginals
    double h_joint = 0.0;     // entropy of the full (syndrome, class) table
    int p = 1;                // physical qubits per logical qubit
};

/// Q_SS = (1/p) [1 + h(syndrome marginals) - h(joint table)]. Also computes
/// the conditional-entropy route s_x2 = sum_i Pr(i) h4(Pr(B|i)) and checks
/// the two routes agree to 1e-12 (std::logic_error otherwise). Requires a
/// normalized table.
CapacityResult shor_smolin_capacity(const JointDistribution& dist, int p);

/// Coherent information (S(rho_Q) - S(rho_RQ)) / p from the same table:
/// S(rho_Q) is the entropy of the 2N-outcome distribution {Pr(i)/2, Pr(i)/2}
/// and S(rho_RQ) the entropy of all table entries. Equals q_ss exactly; the
/// two are computed through different arithmetic routes.
double coherent_information(const JointDistribution& dist, int p);

struct ThresholdOptions {
    double f_lo = 0.75;
    double f_hi = 0.999;
    double scan_step = 1e-3;
    double tol = 1e-7;  // bisection width
};

/// Largest-f zero of a capacity function: pre-scans the bracket at
/// scan_step, takes the highest sign change, and bisects it to tol. Throws
/// std::runtime_error when the scan finds no sign change.
double threshold(const std::function<double(double)>& capacity_of_f,
                 const ThresholdOptions& options = {});

/// All sign-change brackets found by the pre-scan, in increasing f order.
std::vector<std::pair<double, double>> capacity_sign_changes(
    const std::function<double(double)>& capacity_of_f, const ThresholdOptions& options = {});

}  // namespace qcap
