#include "vpal/vcore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vpal {

const char* to_string(VMode mode) {
    return mode == VMode::standard ? "standard" : "vprime";
}

std::optional<VMode> parse_vmode(std::string_view name) {
    if (name == "standard") return VMode::standard;
    if (name == "vprime") return VMode::vprime;
    return std::nullopt;
}

u64 reverse_digits(u64 n) {
    if (n == 0) throw std::domain_error("reverse_digits: requires a positive integer");
    if (n % 10 == 0) {
        throw std::domain_error("reverse_digits: multiples of 10 have no well-defined reversal");
    }
    std::string digits = std::to_string(n);
    std::reverse(digits.begin(), digits.end());
    u128 acc = 0;
    for (char ch : digits) acc = acc * 10 + static_cast<unsigned>(ch - '0');
    if (acc > ~u64{0}) throw std::overflow_error("reverse_digits: reversal exceeds 64 bits");
    return static_cast<u64>(acc);
}

bool is_palindromic(u64 n) {
    return reverse_digits(n) == n;
}

u64 iota(u64 e) {
    if (e == 0) throw std::domain_error("iota: requires a positive exponent");
    return e == 1 ? 0 : e;
}

u64 v_prime_power(u64 p, u64 e, VMode mode) {
    if (e == 0) return 0;
    return p + (mode == VMode::standard ? iota(e) : e);
}

u64 v_value(u64 n, VMode mode) {
    u64 sum = 0;
    for (const auto& f : factorize(n).entries) {
        sum += v_prime_power(f.prime, f.exponent, mode);
    }
    return sum;
}

bool is_v_palindromic(u64 n, VMode mode) {
    if (n == 0 || n % 10 == 0) return false;
    const u64 rev = reverse_digits(n);
    if (rev == n) return false;
    return v_value(n, mode) == v_value(rev, mode);
}

std::optional<u64> reverse_ratio(u64 n) {
    const u64 rev = reverse_digits(n);
    if (rev % n != 0) return std::nullopt;
    return rev / n;
}

}  // namespace vpal
