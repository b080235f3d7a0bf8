#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "qcap/cat.hpp"
#include "qcap/enumerate.hpp"

using namespace qcap;

TEST_CASE("trivial code gives the bare channel row") {
    const auto code = cat_code(1);
    for (double f : {0.6, 0.85, 1.0}) {
        const auto dist =
            joint_distribution(code, uniform_assignment(1, PauliChannel::depolarizing(f)));
        const double g = (1.0 - f) / 3.0;
        REQUIRE(dist.num_syndromes() == 1);
        CHECK(dist.entry(0, LogicalClass::I) == doctest::Approx(f).epsilon(1e-15));
        CHECK(dist.entry(0, LogicalClass::X) == doctest::Approx(g).epsilon(1e-15));
        CHECK(dist.entry(0, LogicalClass::Y) == doctest::Approx(g).epsilon(1e-15));
        CHECK(dist.entry(0, LogicalClass::Z) == doctest::Approx(g).epsilon(1e-15));
    }
}

TEST_CASE("noiseless channel concentrates on the no-error cell") {
    for (const auto& code : {cat_code(4), rotated_cat_code(5), random_stabilizer_code(4, 3)}) {
        const auto dist = joint_distribution(
            code, uniform_assignment(code.n, PauliChannel::depolarizing(1.0)));
        for (size_t i = 0; i < dist.table.size(); ++i) {
            CHECK(dist.table[i] == (i == 0 ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("cat(2) joint distribution at f=0.85") {
    const auto dist =
        joint_distribution(cat_code(2), uniform_assignment(2, PauliChannel::depolarizing(0.85)));
    REQUIRE(dist.num_syndromes() == 2);
    const double expected[2][4] = {{0.725, 0.005, 0.005, 0.085},
                                   {0.045, 0.045, 0.045, 0.045}};
    for (uint32_t i = 0; i < 2; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(std::abs(dist.table[i * 4 + static_cast<size_t>(j)] - expected[i][j]) < 1e-12);
        }
    }
}

TEST_CASE("tables are normalized") {
    std::mt19937_64 rng(61);
    for (const auto& code : {cat_code(6), rotated_cat_code(7), random_stabilizer_code(5, 19)}) {
        for (double f : {0.75, 0.85, 0.99}) {
            const auto dist = joint_distribution(
                code, uniform_assignment(code.n, PauliChannel::depolarizing(f)));
            CHECK(std::abs(dist.total() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("closed form matches enumeration for small cat codes") {
    for (int p = 2; p <= 5; ++p) {
        for (double f : {0.75, 0.81, 0.9}) {
            const auto dist = joint_distribution(
                cat_code(p), uniform_assignment(p, PauliChannel::depolarizing(f)));
            for (uint32_t i = 0; i < dist.num_syndromes(); ++i) {
                const auto cls = cat_coset_probs(p, std::popcount(i), f);
                for (size_t j = 0; j < 4; ++j) {
                    CHECK(std::abs(dist.table[i * 4 + j] - cls.probs[j]) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("fully depolarizing channel counts coset elements") {
    // at f = g = 1/4 every coset cell is exactly 2^(n-1) / 4^n
    for (const auto& code : {cat_code(4), random_stabilizer_code(4, 11)}) {
        const auto dist = joint_distribution(
            code, uniform_assignment(code.n, PauliChannel::depolarizing(0.25)));
        const double cell = std::ldexp(1.0, -(code.n + 1));
        for (double v : dist.table) CHECK(v == cell);
    }
}

TEST_CASE("permuting qubits of code and assignment preserves the table") {
    std::mt19937_64 rng(62);
    const int n = 5;
    const auto code = random_stabilizer_code(n, 23);
    ChannelAssignment assignment;
    for (int q = 0; q < n; ++q) {
        assignment.push_back(PauliChannel::depolarizing(0.78 + 0.03 * q));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    auto permute_pauli = [&](const PauliOperator& p) {
        uint32_t x = 0, z = 0;
        for (int q = 0; q < n; ++q) {
            x |= ((p.x_bits() >> q) & 1) << perm[q];
            z |= ((p.z_bits() >> q) & 1) << perm[q];
        }
        return PauliOperator(n, x, z);
    };

    const auto base = joint_distribution(code, assignment);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        StabilizerCode permuted = code;
        for (auto& g : permuted.generators) g = permute_pauli(g);
        permuted.logical_x = permute_pauli(code.logical_x);
        permuted.logical_z = permute_pauli(code.logical_z);
        ChannelAssignment permuted_assignment(n, PauliChannel::depolarizing(1.0));
        for (int q = 0; q < n; ++q) {
            permuted_assignment[static_cast<size_t>(perm[q])] = assignment[static_cast<size_t>(q)];
        }
        const auto moved = joint_distribution(permuted, permuted_assignment);
        for (size_t i = 0; i < base.table.size(); ++i) {
            CHECK(std::abs(base.table[i] - moved.table[i]) < 1e-13);
        }
    }
}

TEST_CASE("coset probability") {
    const auto assignment2 = uniform_assignment(2, PauliChannel::depolarizing(0.85));
    CHECK(std::abs(coset_probability(cat_code(2), assignment2, PauliOperator::identity(2)) -
                   0.725) < 1e-15);

    const auto trivial = uniform_assignment(1, PauliChannel::depolarizing(0.85));
    CHECK(coset_probability(cat_code(1), trivial, PauliOperator::from_string("X")) ==
          doctest::Approx(0.05).epsilon(1e-14));

    // agrees with the matching joint_distribution cell, and is constant on
    // the coset
    std::mt19937_64 rng(63);
    const auto code = random_stabilizer_code(5, 29);
    const auto assignment = uniform_assignment(5, PauliChannel::depolarizing(0.8));
    const auto dist = joint_distribution(code, assignment);
    for (int trial = 0; trial < 20; ++trial) {
        const uint64_t d = rng();
        const PauliOperator rep(5, static_cast<uint32_t>(d) & qubit_mask(5),
                                static_cast<uint32_t>(d >> 32) & qubit_mask(5));
        const double pr = coset_probability(code, assignment, rep);
        CHECK(std::abs(pr - dist.entry(code.syndrome(rep), code.logical_class(rep))) < 1e-14);
        PauliOperator shifted = rep;
        for (size_t i = 0; i < code.generators.size(); ++i) {
            if ((rng() & 1) != 0) shifted = shifted * code.generators[i];
        }
        CHECK(std::abs(coset_probability(code, assignment, shifted) - pr) < 1e-14);
    }
}

TEST_CASE("q_ss is invariant under the logical representative choice") {
    const auto code = random_stabilizer_code(4, 321);
    StabilizerCode variant = code;
    variant.logical_x = code.logical_x * code.generators[0];
    variant.logical_z = code.logical_z * code.generators[2];
    REQUIRE(!validate(variant).has_value());
    const auto assignment = uniform_assignment(4, PauliChannel::depolarizing(0.82));
    const auto a = shor_smolin_capacity(joint_distribution(code, assignment), 4);
    const auto b = shor_smolin_capacity(joint_distribution(variant, assignment), 4);
    CHECK(std::abs(a.q_ss - b.q_ss) < 1e-12);
}

TEST_CASE("csv dump") {
    const auto dist =
        joint_distribution(cat_code(2), uniform_assignment(2, PauliChannel::depolarizing(0.85)));
    std::ostringstream out;
    dist.write_csv(out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "syndrome,phi_plus,psi_plus,psi_minus,phi_minus");
    int rows = 0;
    std::string line;
    double total = 0.0;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        int syndrome;
        double a, b, c, d;
        REQUIRE((fields >> syndrome >> a >> b >> c >> d));
        CHECK(syndrome == rows);
        total += a + b + c + d;
        ++rows;
    }
    CHECK(rows == 2);
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("enumeration guards") {
    const auto big = cat_code(13);
    CHECK_THROWS_AS(
        joint_distribution(big, uniform_assignment(13, PauliChannel::depolarizing(0.9))),
        std::invalid_argument);
    // raising the cap admits it (n=13 is ~6.7e7 errors; keep to a cheap guard test)
    EnumerationOptions opts;
    opts.max_qubits = 13;
    CHECK_NOTHROW(coset_probability(big, uniform_assignment(13, PauliChannel::depolarizing(0.9)),
                                    PauliOperator::identity(13), opts));

    StabilizerCode invalid = cat_code(3);
    invalid.generators[1] = invalid.generators[0];
    CHECK_THROWS_AS(
        joint_distribution(invalid, uniform_assignment(3, PauliChannel::depolarizing(0.9))),
        std::invalid_argument);
    CHECK_THROWS_AS(
        joint_distribution(cat_code(3), uniform_assignment(2, PauliChannel::depolarizing(0.9))),
        std::invalid_argument);
}

TEST_CASE("syndrome marginal equals the sum of its four class cosets") {
    std::mt19937_64 rng(64);
    const auto code = random_stabilizer_code(4, 17);
    const auto assignment = uniform_assignment(4, PauliChannel::depolarizing(0.8));
    const auto dist = joint_distribution(code, assignment);
    for (int trial = 0; trial < 10; ++trial) {
        const uint64_t d = rng();
        const PauliOperator rep(4, static_cast<uint32_t>(d) & qubit_mask(4),
                                static_cast<uint32_t>(d >> 32) & qubit_mask(4));
        const double by_cosets =
            coset_probability(code, assignment, rep) +
            coset_probability(code, assignment, rep * code.logical_x) +
            coset_probability(code, assignment, rep * code.logical_x * code.logical_z) +
            coset_probability(code, assignment, rep * code.logical_z);
        CHECK(std::abs(by_cosets - dist.syndrome_probability(code.syndrome(rep))) < 1e-14);
    }
}
