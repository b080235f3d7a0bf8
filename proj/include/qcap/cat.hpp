#pragma once

#include <array>
#include <cstdint>

#include "qcap/capacity.hpp"
#include "qcap/stabilizer.hpp"

namespace qcap {

/// The [p, 1, 1] cat code: stabilizers Z1Z2, Z1Z3, ..., Z1Zp; code words
/// |00...0> and |11...1>; logical_z = Z1, logical_x = X on every qubit.
/// p = 1 gives the trivial empty-generator code.
StabilizerCode cat_code(int p);

/// Cat code with the roles of X and Z swapped.
StabilizerCode rotated_cat_code(int p);

/// Exact binomial coefficient; requires the result to fit in 64 bits
/// (any n <= 61 does).
uint64_t binomial_exact(int n, int k);

/// Closed-form coset probabilities of the cat code for a depolarizing
/// channel, for the syndrome class with r ones (0 <= r <= p-1):
///   Pr(Psi+-, r) = 2^(p-r-1) g^(p-r) (f+g)^r
///   Pr(Phi+-, r) = 2^(r-1)  g^r     (f+g)^(p-r)        for r > 0
///   Pr(Phi+-, 0) = ((f+g)^p +- (f-g)^p) / 2
/// Each class covers C(p-1, r) equal syndrome rows.
struct CatCosetProbs {
    int p = 1;
    int r = 0;
    std::array<double, 4> probs{};  // (Phi+, Psi+, Psi-, Phi-)
    uint64_t multiplicity = 1;      // C(p-1, r)
};

CatCosetProbs cat_coset_probs(int p, int r, double f);

/// Cat-code Q_SS for arbitrary p from the closed forms, weighting each
/// r-class by its multiplicity instead of enumerating 4^p errors. Matches
/// shor_smolin_capacity(joint_distribution(cat_code(p)), p) when p is
/// within the enumeration cap.
CapacityResult cat_qss(int p, double f);

/// Coherent-information route over the same r-classes; equals
/// cat_qss(p, f).q_ss.
double cat_coherent_information(int p, double f);

/// The p -> infinity threshold: the root in (0.75, 1) of
/// (f-g)^2 / (f+g) = sqrt(8 g (f+g)) with g = (1-f)/3, bisected to 1e-9.
double asymptotic_threshold();

}  // namespace qcap
