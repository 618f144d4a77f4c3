#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vpal {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Exclusive upper bound accepted by factorize().
inline constexpr u64 kFactorLimit = u64{1} << 63;

struct FactorEntry {
    u64 prime = 0;
    u32 exponent = 0;

    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

/// Prime factorization with entries ascending by prime. 1 maps to no entries.
struct Factorization {
    std::vector<FactorEntry> entries;

    u64 value() const;
    u32 exponent_of(u64 p) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Factors 1 <= m < 2^63. Trial division for small factors, Brent's cycle
/// method with fixed deterministic parameters for the rest.
Factorization factorize(u64 m);

/// Largest e with p^e | m. Requires m >= 1 and p >= 2.
u32 padic_valuation(u64 m, u64 p);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

// 128-bit variants require m < 2^127 so the shift-and-add steps cannot wrap.
u128 mul_mod(u128 a, u128 b, u128 m);
u128 pow_mod(u128 a, u128 e, u128 m);

u128 gcd_u128(u128 a, u128 b);

/// Least t >= 1 with a^t = 1 mod m. Requires 2 <= m < 2^63 and gcd(a, m) = 1.
/// Works down from the factored unit-group order, never by iteration.
u64 multiplicative_order(u64 a, u64 m);

/// Same, modulo p^gamma given as an explicit prime power; the modulus may
/// exceed 64 bits. The unit group has order p^(gamma-1) * (p-1).
u128 multiplicative_order_mod_prime_power(u128 a, u64 p, u32 gamma);

/// p^e, throwing std::overflow_error once the result would reach 2^127.
u128 checked_pow(u64 p, u32 e);

/// lcm of all values; 1 for an empty span. Throws on zero or u64 overflow.
u64 lcm_all(std::span<const u64> values);

/// lcm with u128 overflow checking.
u128 lcm_u128(u128 a, u128 b);

std::string to_string(u128 v);
u128 parse_u128(std::string_view s);

}  // namespace vpal
