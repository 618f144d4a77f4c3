#pragma once

#include <optional>

#include "vpal/arith.hpp"

namespace vpal {

/// Exponent convention for the digit-free prime sum. The standard form adds
/// p for every prime and the exponent only when it exceeds 1; the vprime
/// form always adds the exponent.
enum class VMode { standard, vprime };

const char* to_string(VMode mode);
std::optional<VMode> parse_vmode(std::string_view name);

/// Decimal reversal r(n). Requires n >= 1 and n not a multiple of 10
/// (reversal would drop the trailing zero and fail to be an involution).
u64 reverse_digits(u64 n);

/// n == r(n). Same preconditions as reverse_digits.
bool is_palindromic(u64 n);

/// 0 when e == 1, otherwise e. Requires e >= 1.
u64 iota(u64 e);

/// Sum of p + iota(e) over the prime factorization of n (p + e in vprime
/// mode). Completely additive over coprime arguments; 1 maps to 0.
u64 v_value(u64 n, VMode mode = VMode::standard);

/// Contribution of the single prime power p^e; e == 0 contributes 0.
u64 v_prime_power(u64 p, u64 e, VMode mode = VMode::standard);

/// True iff 10 does not divide n, n != r(n), and v(n) == v(r(n)). Multiples
/// of 10 and palindromes return false rather than throwing so that range
/// scans need no filtering.
bool is_v_palindromic(u64 n, VMode mode = VMode::standard);

/// q when r(n) = q * n exactly, empty otherwise.
std::optional<u64> reverse_ratio(u64 n);

}  // namespace vpal
