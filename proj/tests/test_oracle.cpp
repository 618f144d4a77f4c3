#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vpal/oracle.hpp"

using namespace vpal;

TEST_CASE("direct oracle on known repetitions") {
    CHECK(check_repeat_direct(819, 3).verdict);
    CHECK(check_repeat_direct(819, 1).verdict);
    CHECK_FALSE(check_repeat_direct(819, 2).verdict);
    CHECK(check_repeat_direct(18, 2).verdict);
    CHECK_FALSE(check_repeat_direct(12, 1).verdict);
    CHECK_FALSE(check_repeat_direct(13, 1).verdict);
    CHECK(check_repeat_direct(13, 15).verdict);
}

TEST_CASE("direct oracle records the rho valuations") {
    const OracleVerdict v = check_repeat_direct(819, 2);
    REQUIRE(v.g_values.size() == 5);
    OrderTable table;
    for (const auto& [p, g] : v.g_values) {
        CHECK(g == order_in_rho(p, 2, 3, 30, table));
    }
    // rho(2,3) = 1001 = 7 * 11 * 13
    CHECK(v.g_values[2] == std::pair<u64, u32>{7, 1});
    CHECK(v.g_values[3] == std::pair<u64, u32>{13, 1});
    CHECK(v.g_values[4] == std::pair<u64, u32>{17, 0});
}

TEST_CASE("direct oracle rejects oversized repetitions") {
    CHECK_THROWS_AS(check_repeat_direct(819, 400000), std::domain_error);
    CHECK_THROWS_AS(check_repeat_direct(819, 0), std::domain_error);
    CHECK_THROWS_AS(check_repeat_direct(121, 3), std::domain_error);
}

TEST_CASE("full-factor oracle on known repetitions") {
    CHECK(check_full_factor(18, 2).verdict);
    CHECK(v_value(1818) == 108);
    CHECK(v_value(8181) == 108);
    CHECK(check_full_factor(819, 1).verdict);
    CHECK(v_value(819) == 25);
    CHECK(v_value(918) == 25);
    CHECK_FALSE(check_full_factor(23, 1).verdict);
    CHECK(check_full_factor(18, 3).verdict);  // 181818
}

TEST_CASE("full-factor oracle rejects repetitions beyond 64-bit factoring") {
    CHECK_THROWS_AS(check_full_factor(999999999, 3), std::domain_error);
    CHECK_THROWS_AS(check_full_factor(120, 1), std::domain_error);
}

TEST_CASE("both oracles agree wherever both apply") {
    for (u64 n = 11; n <= 99; ++n) {
        if (n % 10 == 0 || n % 11 == 0) continue;
        for (u64 c = 1; c <= 9; ++c) {
            for (VMode mode : {VMode::standard, VMode::vprime}) {
                CHECK(check_repeat_direct(n, c, mode).verdict ==
                      check_full_factor(n, c, mode).verdict);
            }
        }
    }
}

TEST_CASE("819 oracle agrees with the closed form") {
    for (u64 c = 1; c <= 2000; ++c) {
        const bool expected = (c % 2 == 1) || (c % 272 == 0 && c % 7 != 0 && c % 13 != 0);
        CHECK(check_repeat_direct(819, c).verdict == expected);
    }
}

TEST_CASE("cross_validate runs clean on a small rectangle") {
    OrderTable table;
    const CrossValidateReport r = cross_validate(11, 99, 50, table);
    CHECK(r.clean());
    CHECK(r.checked == 72 * 50);  // 80 non-multiples of 10 minus 8 palindromes

    const CrossValidateReport r819 = cross_validate(819, 819, 600, table);
    CHECK(r819.clean());
    CHECK(r819.checked == 600);

    const CrossValidateReport empty = cross_validate(11, 10, 50, table);
    CHECK(empty.checked == 0);
    CHECK(empty.clean());
}

TEST_CASE("cross_validate in vprime mode") {
    OrderTable table;
    CHECK(cross_validate(11, 99, 40, table, VMode::vprime).clean());
}
