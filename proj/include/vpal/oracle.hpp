#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vpal/predicate.hpp"

namespace vpal {

// Independent slow deciders for the same question the compiled predicate
// answers. They share no divisibility machinery with the fast route: the
// direct oracle materializes rho and takes p-adic valuations by exact
// division, the full-factor oracle factors the entire repetition.

inline constexpr u64 kMaxOracleDigits = 1'000'000;

struct OracleVerdict {
    enum class Method { direct_order, full_factor };

    u64 n = 0;
    u64 c = 0;
    bool verdict = false;
    Method method = Method::direct_order;
    std::vector<std::pair<u64, u32>> g_values;  // (prime, ord_p(rho)), direct only
};

/// Decides v-palindromicity of the c-fold repetition through the signed sum
/// of v(p^(e+g)) - v(p^(f+g)) over the differing primes, with each
/// g = ord_p(rho(c, k)) read off the materialized repetition number by
/// exact division. Requires c * digit_count(n) <= kMaxOracleDigits.
OracleVerdict check_repeat_direct(u64 n, u64 c, VMode mode = VMode::standard);

/// Same question by brute force: factor the full repetition and compare v
/// values directly. Only valid while the repetition stays below 2^63.
OracleVerdict check_full_factor(u64 n, u64 c, VMode mode = VMode::standard);

struct Disagreement {
    u64 n = 0;
    u64 c = 0;
    bool fast = false;
    bool direct_oracle = false;
    std::optional<bool> full_factor;
};

struct CrossValidateReport {
    u64 checked = 0;
    std::vector<Disagreement> disagreements;

    bool clean() const { return disagreements.empty(); }
};

/// Runs the compiled predicate against both oracles over a rectangle of
/// inputs (full-factor only where the repetition fits 64 bits). Multiples
/// of 10 and palindromes are skipped. Disagreements are collected, not
/// thrown: they are the report's content.
CrossValidateReport cross_validate(u64 n_lo, u64 n_hi, u64 c_max,
                                   OrderTable& table,
                                   VMode mode = VMode::standard);

}  // namespace vpal
