#include "vpal/repeat.hpp"

#include <stdexcept>
#include <string>

namespace vpal {

BigInt rho(u64 c, u64 k) {
    if (c == 0 || k == 0) throw std::domain_error("rho: c and k must be positive");
    if (k > kMaxRepeatDigits / c) {
        throw std::domain_error("rho: repetition number exceeds the digit budget");
    }
    std::string digits;
    digits.reserve((c - 1) * k + 1);
    digits.push_back('1');
    for (u64 i = 1; i < c; ++i) {
        digits.append(k - 1, '0');
        digits.push_back('1');
    }
    return BigInt::from_decimal(digits);
}

BigInt repeat_number(u64 n, u64 c) {
    if (n == 0) throw std::domain_error("repeat_number: requires a positive integer");
    if (n % 10 == 0) {
        throw std::domain_error("repeat_number: multiples of 10 have no valid repetition");
    }
    if (c == 0) throw std::domain_error("repeat_number: repetition count must be positive");
    const std::string block = std::to_string(n);
    if (block.size() > kMaxRepeatDigits / c) {
        throw std::domain_error("repeat_number: repetition exceeds the digit budget");
    }
    std::string digits;
    digits.reserve(block.size() * c);
    for (u64 i = 0; i < c; ++i) digits += block;
    return BigInt::from_decimal(digits);
}

bool OrderTable::lookup(const OrderKey& key, OrderEntry& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
}

void OrderTable::insert(const OrderKey& key, const OrderEntry& entry) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.insert({key, entry});
}

std::vector<std::pair<OrderKey, OrderEntry>> OrderTable::snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {entries_.begin(), entries_.end()};
}

OrderEntry h_entry(u64 p, u32 alpha, u64 k, OrderTable& table) {
    if (p == 2 || p == 5) {
        throw std::domain_error("h_entry: 10^k is not a unit modulo powers of 2 or 5");
    }
    if (alpha == 0) throw std::domain_error("h_entry: alpha must be positive");
    if (k == 0) throw std::domain_error("h_entry: k must be positive");
    if (k > kMaxRepeatDigits) throw std::domain_error("h_entry: k exceeds the digit budget");
    if (!is_prime(p)) throw std::domain_error("h_entry: p must be prime");

    const OrderKey key{p, alpha, k};
    OrderEntry entry;
    if (table.lookup(key, entry)) return entry;

    const BigInt nines = BigInt::from_decimal(std::string(k, '9'));
    entry.beta = padic_valuation(nines, p);
    const u32 gamma = alpha + entry.beta;
    const u128 modulus = checked_pow(p, gamma);
    const u128 base = pow_mod(u128{10}, u128{k}, modulus);
    entry.h = multiplicative_order_mod_prime_power(base, p, gamma);
    table.insert(key, entry);
    return entry;
}

u128 h_value(u64 p, u32 alpha, u64 k, OrderTable& table) {
    return h_entry(p, alpha, k, table).h;
}

u32 order_in_rho(u64 p, u64 c, u64 k, u32 cap, OrderTable& table) {
    if (c == 0 || k == 0) throw std::domain_error("order_in_rho: c and k must be positive");
    if (p == 2 || p == 5) return 0;
    u32 g = 0;
    while (g < cap) {
        const u128 h = h_value(p, g + 1, k, table);
        if (u128{c} % h != 0) break;
        ++g;
    }
    return g;
}

}  // namespace vpal
