#include <cstdint>
#include <vector>

#include "boxfree/bounds.hpp"
#include "doctest.h"

using namespace boxfree;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("upper-bound exponent") {
    CHECK(erdos_exponent(std::vector<std::uint64_t>{2, 2}) == Rational(3, 2));
    CHECK(erdos_exponent(std::vector<std::uint64_t>{2, 2, 2}) == Rational(11, 4));
    CHECK(erdos_exponent(std::vector<std::uint64_t>{1, 7}) == Rational(1));  // degenerate
    CHECK_THROWS_AS(erdos_exponent(std::vector<std::uint64_t>{3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(erdos_exponent(std::vector<std::uint64_t>{0, 2}), std::invalid_argument);
}

TEST_CASE("best known lower-bound exponent") {
    CHECK(cpz_exponent(2) == Rational(3, 2));   // ceil(3/2) = 2
    CHECK(cpz_exponent(4) == Rational(15, 4));  // ceil(15/4) = 4
    CHECK(cpz_exponent(5) == Rational(34, 7));  // ceil(31/5) = 7
    CHECK_THROWS_AS(cpz_exponent(1), std::invalid_argument);
}

TEST_CASE("construction exponent r - 1/r") {
    CHECK(construction_exponent(2) == Rational(3, 2));
    CHECK(construction_exponent(3) == Rational(8, 3));
    CHECK(construction_exponent(4) == Rational(15, 4));
    CHECK_THROWS_AS(construction_exponent(1), std::invalid_argument);
}

TEST_CASE("comparison table flags equality exactly for r in {2,3,4}") {
    const auto table = comparison_table(10);
    REQUIRE(table.size() == 9);
    for (const auto& rec : table) {
        CHECK(rec.matches_cpz == (rec.r <= 4));
        if (rec.r == 3) CHECK(rec.cpz == Rational(8, 3));  // ceil(7/3) = 3
        if (rec.r == 5) {
            CHECK(rec.cpz == Rational(34, 7));
            CHECK(rec.construction == Rational(24, 5));
            CHECK(rec.construction < rec.cpz);  // 4.8 < 4.857...
        }
    }
    CHECK_THROWS_AS(comparison_table(1), std::invalid_argument);
}

TEST_CASE("exponent identities hold for every r up to 62") {
    for (std::uint32_t r = 2; r <= 62; ++r) {
        const std::vector<std::uint64_t> twos(r, 2);
        const Rational erdos = erdos_exponent(twos);
        const Rational mine = construction_exponent(r);
        const Rational cpz = cpz_exponent(r);
        CHECK(mine <= erdos);
        CHECK((mine == erdos) == (r == 2));  // 1/r = 1/2^(r-1) only at r = 2
        CHECK((mine == cpz) == (r <= 4));    // ceil((2^r-1)/r) = r only there
        CHECK(mine > Rational(static_cast<long long>(r) - 1));
        CHECK(erdos < Rational(static_cast<long long>(r)));
    }
}

TEST_CASE("rational rendering") {
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_double(Rational(3, 2)) == doctest::Approx(1.5));
}

TEST_SUITE_END();
