#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vpal/arith.hpp"

namespace vpal {

struct BigIntDiv;

/// Non-negative integer of unbounded size. Limbs are base 10^9, little
/// endian, with no trailing zero limbs; zero is the empty limb vector.
class BigInt {
public:
    BigInt() = default;
    explicit BigInt(u64 value);

    /// Parses a decimal string. Leading zeros are accepted and dropped.
    static BigInt from_decimal(std::string_view digits);

    std::string to_decimal() const;
    std::optional<u64> to_u64() const;

    bool is_zero() const { return limbs_.empty(); }
    u64 decimal_digit_count() const;

    /// Short division. Requires 1 <= divisor < 2^63.
    BigIntDiv divmod(u64 divisor) const;

    BigInt operator*(const BigInt& rhs) const;

    friend bool operator==(const BigInt&, const BigInt&) = default;

private:
    static constexpr u32 kBase = 1'000'000'000;

    void trim();

    std::vector<u32> limbs_;
};

struct BigIntDiv {
    BigInt quotient;
    u64 remainder = 0;
};

/// Largest e with p^e | m, by repeated exact division. Requires m != 0.
u32 padic_valuation(const BigInt& m, u64 p);

}  // namespace vpal
