#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "doctest.h"
#include "vpal/vcore.hpp"

using namespace vpal;

TEST_CASE("reverse_digits") {
    CHECK(reverse_digits(198) == 891);
    CHECK(reverse_digits(819) == 918);
    CHECK(reverse_digits(7) == 7);
    CHECK(reverse_digits(2178) == 8712);
    CHECK_THROWS_AS(reverse_digits(0), std::domain_error);
    CHECK_THROWS_AS(reverse_digits(10), std::domain_error);
    CHECK_THROWS_AS(reverse_digits(1200), std::domain_error);
}

TEST_CASE("reverse_digits is an involution") {
    for (u64 n = 1; n <= 1000000; ++n) {
        if (n % 10 == 0) continue;
        CHECK(reverse_digits(reverse_digits(n)) == n);
    }
}

TEST_CASE("is_palindromic") {
    CHECK(is_palindromic(121));
    CHECK(is_palindromic(7));
    CHECK_FALSE(is_palindromic(12));
    CHECK_THROWS_AS(is_palindromic(120), std::domain_error);
}

TEST_CASE("iota") {
    CHECK(iota(1) == 0);
    CHECK(iota(2) == 2);
    CHECK(iota(9) == 9);
    CHECK_THROWS_AS(iota(0), std::domain_error);
}

TEST_CASE("v on known values") {
    CHECK(v_value(198) == 18);   // 2 + (3+2) + 11
    CHECK(v_value(1) == 0);
    CHECK(v_value(819) == 25);   // (3+2) + 7 + 13
    CHECK(v_value(918) == 25);   // 2 + (3+3) + 17
    CHECK(v_value(12) == 7);
    CHECK(v_value(21) == 10);
    CHECK(v_value(8) == 5);
    CHECK(v_value(1818) == 108);
    CHECK(v_value(8181) == 108);
}

TEST_CASE("v in vprime mode always adds the exponent") {
    CHECK(v_value(18, VMode::vprime) == 8);    // (2+1) + (3+2)
    CHECK(v_value(81, VMode::vprime) == 7);    // 3 + 4
    CHECK(v_value(7, VMode::vprime) == 8);
    CHECK(v_value(7) == 7);
    CHECK(v_prime_power(7, 1, VMode::vprime) == 8);
    CHECK(v_prime_power(7, 1) == 7);
    CHECK(v_prime_power(7, 0) == 0);
    CHECK(v_prime_power(7, 0, VMode::vprime) == 0);
}

TEST_CASE("v is completely additive over coprime pairs") {
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<u64> dist(2, 1000000);
    int done = 0;
    while (done < 10000) {
        const u64 a = dist(rng);
        const u64 b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        for (VMode mode : {VMode::standard, VMode::vprime}) {
            CHECK(v_value(a * b, mode) == v_value(a, mode) + v_value(b, mode));
        }
        ++done;
    }
}

TEST_CASE("is_v_palindromic") {
    CHECK(is_v_palindromic(198));
    CHECK(is_v_palindromic(891));
    CHECK(is_v_palindromic(18));
    CHECK_FALSE(is_v_palindromic(121));  // palindrome, excluded by definition
    CHECK_FALSE(is_v_palindromic(12));   // v = 7 vs v(21) = 10
    CHECK_FALSE(is_v_palindromic(120));  // multiple of 10, no error
    CHECK_FALSE(is_v_palindromic(0));
}

TEST_CASE("v-palindromicity is symmetric under reversal") {
    for (u64 n = 1; n <= 100000; ++n) {
        if (n % 10 == 0 || n == reverse_digits(n)) continue;
        CHECK(is_v_palindromic(n) == is_v_palindromic(reverse_digits(n)));
    }
}

TEST_CASE("reverse_ratio") {
    CHECK(reverse_ratio(2178) == 4);
    CHECK(reverse_ratio(1089) == 9);
    CHECK_FALSE(reverse_ratio(198).has_value());  // 891 = 4.5 * 198
    CHECK(reverse_ratio(121) == 1);
    CHECK(reverse_ratio(5) == 1);
    CHECK_THROWS_AS(reverse_ratio(30), std::domain_error);
}
