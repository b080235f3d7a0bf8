#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qcap/pauli.hpp"

using qcap::PauliOperator;

namespace {

PauliOperator random_pauli(int n, std::mt19937_64& rng) {
    const uint64_t d = rng();
    return PauliOperator(n, static_cast<uint32_t>(d) & qcap::qubit_mask(n),
                         static_cast<uint32_t>(d >> 32) & qcap::qubit_mask(n));
}

}  // namespace

TEST_CASE("pauli string parsing") {
    const auto id3 = PauliOperator::from_string("III");
    CHECK(id3.is_identity());
    CHECK(id3.num_qubits() == 3);

    const auto xiz = PauliOperator::from_string("XIZ");
    CHECK(xiz.x_bits() == 0b001u);
    CHECK(xiz.z_bits() == 0b100u);

    const auto y = PauliOperator::from_string("Y");
    CHECK(y.x_bits() == 1u);
    CHECK(y.z_bits() == 1u);

    CHECK_THROWS_AS(PauliOperator::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::from_string("XAZ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::from_string(std::string(33, 'I')), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator(2, 0b100u, 0u), std::invalid_argument);
}

TEST_CASE("pauli string round trip") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 32);
        const auto p = random_pauli(n, rng);
        CHECK(PauliOperator::from_string(p.str()) == p);
    }
}

TEST_CASE("weight") {
    CHECK(PauliOperator::from_string("III").weight() == 0);
    CHECK(PauliOperator::from_string("XIZ").weight() == 2);
    CHECK(PauliOperator::from_string("YYY").weight() == 3);
}

TEST_CASE("commutation") {
    const auto X = PauliOperator::from_string("X");
    const auto Z = PauliOperator::from_string("Z");
    CHECK_FALSE(X.commutes_with(Z));
    CHECK(PauliOperator::from_string("XX").commutes_with(PauliOperator::from_string("ZZ")));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto e = random_pauli(6, rng);
        CHECK(e.commutes_with(PauliOperator::identity(6)));
    }
    CHECK_THROWS_AS((void)X.commutes_with(PauliOperator::from_string("XX")),
                    std::invalid_argument);
}

TEST_CASE("multiplication drops phases") {
    const auto X = PauliOperator::from_string("X");
    const auto Z = PauliOperator::from_string("Z");
    CHECK(X * Z == PauliOperator::from_string("Y"));
    CHECK(PauliOperator::from_string("ZZI") * PauliOperator::from_string("ZIZ") ==
          PauliOperator::from_string("IZZ"));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto e = random_pauli(8, rng);
        CHECK((e * e).is_identity());
    }
    CHECK_THROWS_AS(X * PauliOperator::from_string("XX"), std::invalid_argument);
}

TEST_CASE("symplectic bilinearity") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto a = random_pauli(n, rng);
        const auto b = random_pauli(n, rng);
        const auto c = random_pauli(n, rng);
        CHECK((a * b).commutes_with(c) == (a.commutes_with(c) == b.commutes_with(c)));
    }
}
