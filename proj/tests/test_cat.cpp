#include <bit>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qcap/capacity.hpp"
#include "qcap/cat.hpp"
#include "qcap/enumerate.hpp"

using namespace qcap;

TEST_CASE("cat code construction") {
    const auto c3 = cat_code(3);
    REQUIRE(c3.generators.size() == 2);
    CHECK(c3.generators[0].str() == "ZZI");
    CHECK(c3.generators[1].str() == "ZIZ");
    CHECK(c3.logical_z.str() == "ZII");
    CHECK(c3.logical_x.str() == "XXX");
    CHECK(!validate(c3).has_value());

    const auto c1 = cat_code(1);
    CHECK(c1.generators.empty());
    CHECK(c1.logical_x.str() == "X");
    CHECK(c1.logical_z.str() == "Z");

    CHECK(!validate(cat_code(32)).has_value());
    CHECK_THROWS_AS(cat_code(0), std::invalid_argument);
    CHECK_THROWS_AS(cat_code(33), std::invalid_argument);
}

TEST_CASE("rotated cat code construction") {
    const auto r3 = rotated_cat_code(3);
    REQUIRE(r3.generators.size() == 2);
    CHECK(r3.generators[0].str() == "XXI");
    CHECK(r3.generators[1].str() == "XIX");
    CHECK(r3.logical_x.str() == "XII");
    CHECK(r3.logical_z.str() == "ZZZ");
    CHECK(!validate(r3).has_value());
}

TEST_CASE("rotated cat table is the cat table with Psi+ and Phi- swapped") {
    const int p = 3;
    const double f = 0.85;
    const auto assignment = uniform_assignment(p, PauliChannel::depolarizing(f));
    const auto cat = joint_distribution(cat_code(p), assignment);
    const auto rot = joint_distribution(rotated_cat_code(p), assignment);
    // rotated generators reorder syndrome content identically (X<->Z swap
    // maps generator i to generator i); classes swap X <-> Z
    for (uint32_t i = 0; i < cat.num_syndromes(); ++i) {
        CHECK(std::abs(rot.entry(i, LogicalClass::I) - cat.entry(i, LogicalClass::I)) < 1e-14);
        CHECK(std::abs(rot.entry(i, LogicalClass::X) - cat.entry(i, LogicalClass::Z)) < 1e-14);
        CHECK(std::abs(rot.entry(i, LogicalClass::Y) - cat.entry(i, LogicalClass::Y)) < 1e-14);
        CHECK(std::abs(rot.entry(i, LogicalClass::Z) - cat.entry(i, LogicalClass::X)) < 1e-14);
    }
}

TEST_CASE("binomial_exact") {
    CHECK(binomial_exact(0, 0) == 1);
    CHECK(binomial_exact(5, 2) == 10);
    CHECK(binomial_exact(5, 6) == 0);
    CHECK(binomial_exact(59, 29) == 59132290782430712ull);
    CHECK_THROWS_AS(binomial_exact(80, 40), std::invalid_argument);
}

TEST_CASE("cat coset probabilities") {
    // frozen closed-form spot values
    const auto r1 = cat_coset_probs(3, 1, 0.85);
    CHECK(r1.probs[1] == doctest::Approx(0.0045).epsilon(1e-13));
    CHECK(r1.multiplicity == 2);

    const auto r0 = cat_coset_probs(2, 0, 0.85);
    CHECK(r0.probs[0] == doctest::Approx(0.725).epsilon(1e-14));

    const auto noiseless = cat_coset_probs(4, 0, 1.0);
    CHECK(noiseless.probs == std::array<double, 4>{1.0, 0.0, 0.0, 0.0});

    CHECK_THROWS_AS(cat_coset_probs(3, 3, 0.8), std::invalid_argument);
    CHECK_THROWS_AS(cat_coset_probs(3, -1, 0.8), std::invalid_argument);
}

TEST_CASE("cat coset probability symmetries and normalization") {
    for (int p : {2, 5, 13, 30}) {
        for (double f : {0.75, 0.81, 0.9}) {
            double total = 0.0;
            for (int r = 0; r < p; ++r) {
                const auto cls = cat_coset_probs(p, r, f);
                CHECK(cls.probs[1] == cls.probs[2]);
                if (r > 0) CHECK(cls.probs[0] == cls.probs[3]);
                CHECK(cls.multiplicity == binomial_exact(p - 1, r));
                total += static_cast<double>(cls.multiplicity) *
                         (cls.probs[0] + cls.probs[1] + cls.probs[2] + cls.probs[3]);
            }
            CHECK(std::abs(total - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("cat_qss reduces to hashing for p=1") {
    for (double f : {0.5, 0.81, 0.9}) {
        CHECK(cat_qss(1, f).q_ss == doctest::Approx(hashing_capacity(f)).epsilon(1e-14));
    }
}

TEST_CASE("cat_qss equals the enumerated capacity") {
    for (int p = 2; p <= 5; ++p) {
        for (double f : {0.75, 0.81, 0.9}) {
            const auto dist = joint_distribution(
                cat_code(p), uniform_assignment(p, PauliChannel::depolarizing(f)));
            const auto enumerated = shor_smolin_capacity(dist, p);
            const auto closed = cat_qss(p, f);
            CHECK(std::abs(enumerated.q_ss - closed.q_ss) < 1e-12);
            CHECK(std::abs(enumerated.s_x2 - closed.s_x2) < 1e-12);
            CHECK(std::abs(enumerated.h_syndrome - closed.h_syndrome) < 1e-12);
            CHECK(std::abs(enumerated.h_joint - closed.h_joint) < 1e-12);
        }
    }
}

TEST_CASE("closed-form coherent information equals cat_qss") {
    for (int p : {1, 2, 3, 5, 8, 14, 20, 30}) {
        for (double f : {0.75, 0.81, 0.9, 1.0}) {
            CHECK(std::abs(cat_coherent_information(p, f) - cat_qss(p, f).q_ss) < 1e-12);
        }
    }
}

TEST_CASE("tabulated thresholds for p=3 and p=14") {
    const double t3 = threshold([](double f) { return cat_qss(3, f).q_ss; });
    CHECK(std::abs(t3 - 0.80987) < 5e-5);
    const double t14 = threshold([](double f) { return cat_qss(14, f).q_ss; });
    CHECK(std::abs(t14 - 0.81085) < 5e-5);
}

TEST_CASE("threshold parity structure") {
    double thr[15];
    for (int p = 1; p <= 14; ++p) {
        thr[p] = threshold([p](double f) { return cat_qss(p, f).q_ss; });
    }
    // odd-p codes beat the neighboring even-p codes
    for (int k = 1; k <= 3; ++k) {
        CHECK(thr[2 * k + 1] < thr[2 * k]);
    }
    // within each parity class the tail p = 9..14 worsens monotonically
    CHECK(thr[11] > thr[9]);
    CHECK(thr[13] > thr[11]);
    CHECK(thr[12] > thr[10]);
    CHECK(thr[14] > thr[12]);
}

TEST_CASE("asymptotic threshold") {
    const double f_inf = asymptotic_threshold();
    CHECK(std::abs(f_inf - 0.81808) < 5e-5);

    const double g = (1.0 - f_inf) / 3.0;
    const double residual = (f_inf - g) * (f_inf - g) / (f_inf + g) -
                            std::sqrt(8.0 * g * (f_inf + g));
    CHECK(std::abs(residual) < 1e-8);

    const double t5 = threshold([](double f) { return cat_qss(5, f).q_ss; });
    CHECK(f_inf > t5);
}
