#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "qcap/code_io.hpp"

using namespace qcap;

TEST_CASE("json code loading") {
    std::istringstream full(R"({
        "n": 3,
        "generators": ["ZZI", "ZIZ"],
        "logical_x": "XXX",
        "logical_z": "ZII"
    })");
    const auto code = read_code_json(full);
    CHECK(code.n == 3);
    CHECK(code.generators == cat_code(3).generators);
    CHECK(code.logical_x == cat_code(3).logical_x);

    std::istringstream derived(R"({"n": 3, "generators": ["ZZI", "ZIZ"]})");
    const auto auto_logicals = read_code_json(derived);
    CHECK(auto_logicals.logical_z.str() == "ZII");
    CHECK(auto_logicals.logical_x.str() == "XXX");
}

TEST_CASE("json code loading rejects bad input") {
    auto rejects = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_code_json(in), std::invalid_argument);
    };
    rejects("not json");
    rejects(R"({"generators": ["ZZ"]})");
    rejects(R"({"n": 2, "generators": ["ZZ"], "logical_x": "XX"})");  // one logical only
    rejects(R"({"n": 2, "generators": ["ZQ"]})");
    rejects(R"({"n": 3, "generators": ["ZZI", "ZZI"]})");  // dependent
    rejects(R"({"n": 3, "generators": ["ZZI"]})");         // wrong generator count
}

TEST_CASE("a [2,1] code from a single generator") {
    std::istringstream in(R"({"n": 2, "generators": ["XZ"]})");
    const auto code = read_code_json(in);
    CHECK(!validate(code).has_value());
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_code_json("/nonexistent/code.json"), std::invalid_argument);
}

TEST_CASE("code specs") {
    const auto cat5 = parse_code_spec("cat:5");
    CHECK(cat5.kind == CodeSpec::Kind::Cat);
    CHECK(cat5.p == 5);
    CHECK(make_code(cat5).generators == cat_code(5).generators);
    CHECK(make_level(cat5).permutation_symmetric);

    const auto rot7 = parse_code_spec("rotcat:7");
    CHECK(rot7.kind == CodeSpec::Kind::RotatedCat);
    CHECK(make_code(rot7).logical_x == rotated_cat_code(7).logical_x);

    const auto file = parse_code_spec("file:codes/x.json");
    CHECK(file.kind == CodeSpec::Kind::File);
    CHECK(file.path == "codes/x.json");

    CHECK_THROWS_AS(parse_code_spec("cat"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec("cat:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec("cat:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec("ghz:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec("file:"), std::invalid_argument);
}
