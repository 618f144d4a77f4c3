#include "vpal/bigint.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace vpal {

BigInt::BigInt(u64 value) {
    while (value > 0) {
        limbs_.push_back(static_cast<u32>(value % kBase));
        value /= kBase;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigInt BigInt::from_decimal(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("BigInt: empty decimal string");
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt: not a decimal digit");
    }

    BigInt out;
    const std::size_t n = digits.size();
    out.limbs_.reserve(n / 9 + 1);
    std::size_t pos = n;
    while (pos > 0) {
        const std::size_t chunk = pos >= 9 ? 9 : pos;
        u32 limb = 0;
        for (std::size_t i = pos - chunk; i < pos; ++i) {
            limb = limb * 10 + static_cast<u32>(digits[i] - '0');
        }
        out.limbs_.push_back(limb);
        pos -= chunk;
    }
    out.trim();
    return out;
}

std::string BigInt::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    char buf[10];
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
        out.append(buf, 9);
    }
    return out;
}

std::optional<u64> BigInt::to_u64() const {
    if (limbs_.size() > 3) return std::nullopt;
    u128 acc = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        acc = acc * kBase + limbs_[i];
        if (acc > ~u64{0}) return std::nullopt;
    }
    return static_cast<u64>(acc);
}

u64 BigInt::decimal_digit_count() const {
    if (limbs_.empty()) return 1;
    u64 top_digits = 0;
    for (u32 top = limbs_.back(); top > 0; top /= 10) ++top_digits;
    return (limbs_.size() - 1) * 9 + top_digits;
}

BigIntDiv BigInt::divmod(u64 divisor) const {
    if (divisor == 0) throw std::domain_error("BigInt: division by zero");
    if (divisor >= (u64{1} << 63)) {
        throw std::domain_error("BigInt: divisor must be below 2^63");
    }

    BigIntDiv result;
    result.quotient.limbs_.assign(limbs_.size(), 0);
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const u128 cur = u128{rem} * kBase + limbs_[i];
        result.quotient.limbs_[i] = static_cast<u32>(cur / divisor);
        rem = static_cast<u64>(cur % divisor);
    }
    result.quotient.trim();
    result.remainder = rem;
    return result;
}

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    BigInt out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const u64 a = limbs_[i];
        u64 carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            const u128 cur = u128{out.limbs_[i + j]} + u128{a} * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<u32>(cur % kBase);
            carry = static_cast<u64>(cur / kBase);
        }
        std::size_t pos = i + rhs.limbs_.size();
        while (carry > 0) {
            const u64 cur = out.limbs_[pos] + carry;
            out.limbs_[pos] = static_cast<u32>(cur % kBase);
            carry = cur / kBase;
            ++pos;
        }
    }
    out.trim();
    return out;
}

u32 padic_valuation(const BigInt& m, u64 p) {
    if (m.is_zero()) throw std::domain_error("padic_valuation: zero has infinite valuation");
    if (p < 2) throw std::domain_error("padic_valuation: base must be at least 2");
    u32 e = 0;
    BigInt cur = m;
    for (;;) {
        BigIntDiv d = cur.divmod(p);
        if (d.remainder != 0) return e;
        cur = std::move(d.quotient);
        ++e;
    }
}

}  // namespace vpal
