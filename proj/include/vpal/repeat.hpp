#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "vpal/arith.hpp"
#include "vpal/bigint.hpp"

namespace vpal {

// Digit budget for materialized repetition numbers.
inline constexpr u64 kMaxRepeatDigits = 10'000'000;

/// The repetition number with c ones, adjacent ones separated by k-1 zeros:
/// sum of 10^(k*i) for i in [0, c). rho(c, k) has (c-1)*k + 1 digits.
BigInt rho(u64 c, u64 k);

/// The decimal digits of n written c times in a row; equals n * rho(c, k)
/// for k the digit count of n. Requires n >= 1 not a multiple of 10.
BigInt repeat_number(u64 n, u64 c);

struct OrderKey {
    u64 p = 0;
    u32 alpha = 0;
    u64 k = 0;

    friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

struct OrderEntry {
    u32 beta = 0;  // ord_p(10^k - 1)
    u128 h = 0;    // order of 10^k modulo p^(alpha+beta)

    friend bool operator==(const OrderEntry&, const OrderEntry&) = default;
};

/// Memo table for h values. Thread safe; concurrent misses may recompute
/// the same deterministic entry, which is harmless.
class OrderTable {
public:
    bool lookup(const OrderKey& key, OrderEntry& out) const;
    void insert(const OrderKey& key, const OrderEntry& entry);
    std::vector<std::pair<OrderKey, OrderEntry>> snapshot() const;

private:
    mutable std::mutex mu_;
    std::map<OrderKey, OrderEntry> entries_;
};

/// Computes (and memoizes) beta = ord_p(10^k - 1) and h, the multiplicative
/// order of 10^k modulo p^(alpha+beta). h governs divisibility of rho by
/// p^alpha: p^alpha | rho(c, k) iff h | c, and h > 1 always. Requires p
/// prime, p not 2 or 5, alpha >= 1, k >= 1.
OrderEntry h_entry(u64 p, u32 alpha, u64 k, OrderTable& table);

/// Convenience accessor for h_entry(...).h.
u128 h_value(u64 p, u32 alpha, u64 k, OrderTable& table);

/// min(ord_p(rho(c, k)), cap), decided purely through h divisibility tests;
/// the repetition number itself is never materialized. Returns 0 for p in
/// {2, 5}, which never divide a repetition number.
u32 order_in_rho(u64 p, u64 c, u64 k, u32 cap, OrderTable& table);

}  // namespace vpal
