#include "vpal/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace vpal {

namespace {

constexpr u64 kTrialBound = 1000;
constexpr u128 kMaxModulus = ((u128{1} << 127) - 1);

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        std::vector<bool> sieve(kTrialBound, true);
        for (u64 i = 2; i < kTrialBound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j < kTrialBound; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

u64 brent_step(u64 y, u64 c, u64 n) {
    u64 next = mul_mod(y, y, n) + c;
    if (next >= n) next -= n;
    return next;
}

// Brent's cycle variant of Pollard rho with gcd batching. Deterministic:
// the polynomial offset starts at 1 and only moves on when a round
// degenerates. Requires n odd, composite, > 1.
u64 brent_factor(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = brent_step(y, c, n);
            for (u64 k = 0; k < r && g == 1; k += 128) {
                ys = y;
                const u64 steps = std::min<u64>(128, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = brent_step(y, c, n);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            g = 1;
            do {
                ys = brent_step(ys, c, n);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

}  // namespace

u64 Factorization::value() const {
    u64 result = 1;
    for (const auto& e : entries) {
        for (u32 i = 0; i < e.exponent; ++i) result *= e.prime;
    }
    return result;
}

u32 Factorization::exponent_of(u64 p) const {
    for (const auto& e : entries) {
        if (e.prime == p) return e.exponent;
    }
    return 0;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n % w == 0) return n == w;
    }
    u64 d = n - 1;
    const int s = std::countr_zero(d);
    d >>= s;
    for (u64 w : witnesses) {
        u64 x = pow_mod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness_composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness_composite = false;
                break;
            }
        }
        if (witness_composite) return false;
    }
    return true;
}

Factorization factorize(u64 m) {
    if (m == 0) throw std::domain_error("factorize: zero has no factorization");
    if (m >= kFactorLimit) throw std::domain_error("factorize: input must be below 2^63");

    std::vector<FactorEntry> entries;
    u64 rest = m;
    for (u64 p : small_primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        u32 e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        entries.push_back({p, e});
    }

    if (rest > 1) {
        std::vector<u64> pending{rest};
        std::vector<u64> primes;
        while (!pending.empty()) {
            u64 t = pending.back();
            pending.pop_back();
            if (t < kTrialBound * kTrialBound || is_prime(t)) {
                primes.push_back(t);
                continue;
            }
            const u64 d = brent_factor(t);
            pending.push_back(d);
            pending.push_back(t / d);
        }
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            entries.push_back({primes[i], static_cast<u32>(j - i)});
            i = j;
        }
    }

    std::sort(entries.begin(), entries.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.prime < b.prime; });
    return Factorization{std::move(entries)};
}

u32 padic_valuation(u64 m, u64 p) {
    if (m == 0) throw std::domain_error("padic_valuation: zero has infinite valuation");
    if (p < 2) throw std::domain_error("padic_valuation: base must be at least 2");
    u32 e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128{a} * b) % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

u128 mul_mod(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (m <= (u128{1} << 64)) return (a * b) % m;
    // shift-and-add; sums stay below 2m <= 2^128 because m < 2^127
    u128 result = 0;
    while (b > 0) {
        if (b & 1) {
            result += a;
            if (result >= m) result -= m;
        }
        b >>= 1;
        if (b > 0) {
            a += a;
            if (a >= m) a -= m;
        }
    }
    return result;
}

u128 pow_mod(u128 a, u128 e, u128 m) {
    if (m == 1) return 0;
    u128 result = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

namespace {

// Strips prime factors off the group order while the power stays 1.
template <typename Uint, typename PowFn>
Uint reduce_order(Uint group_order, const std::vector<FactorEntry>& order_factors,
                  PowFn&& pow_is_one) {
    Uint t = group_order;
    for (const auto& f : order_factors) {
        for (u32 i = 0; i < f.exponent; ++i) {
            if (t % f.prime != 0) break;
            Uint candidate = t / f.prime;
            if (pow_is_one(candidate)) {
                t = candidate;
            } else {
                break;
            }
        }
    }
    return t;
}

void merge_factor(std::vector<FactorEntry>& factors, u64 p, u32 e) {
    for (auto& f : factors) {
        if (f.prime == p) {
            f.exponent += e;
            return;
        }
    }
    factors.push_back({p, e});
}

}  // namespace

u64 multiplicative_order(u64 a, u64 m) {
    if (m < 2) throw std::domain_error("multiplicative_order: modulus must be at least 2");
    a %= m;
    if (std::gcd(a, m) != 1) {
        throw std::domain_error("multiplicative_order: arguments must be coprime");
    }

    const Factorization fm = factorize(m);
    u64 group_order = 1;
    std::vector<FactorEntry> order_factors;
    for (const auto& e : fm.entries) {
        if (e.exponent > 1) {
            merge_factor(order_factors, e.prime, e.exponent - 1);
            for (u32 i = 1; i < e.exponent; ++i) group_order *= e.prime;
        }
        for (const auto& q : factorize(e.prime - 1).entries) {
            merge_factor(order_factors, q.prime, q.exponent);
        }
        group_order *= e.prime - 1;
    }

    return reduce_order<u64>(group_order, order_factors,
                             [&](u64 t) { return pow_mod(a, t, m) == 1; });
}

u128 multiplicative_order_mod_prime_power(u128 a, u64 p, u32 gamma) {
    if (gamma == 0) throw std::domain_error("multiplicative_order: gamma must be positive");
    const u128 modulus = checked_pow(p, gamma);
    a %= modulus;
    if (gcd_u128(a, modulus) != 1) {
        throw std::domain_error("multiplicative_order: arguments must be coprime");
    }

    u128 group_order = p - 1;
    for (u32 i = 1; i < gamma; ++i) group_order *= p;
    std::vector<FactorEntry> order_factors = factorize(p - 1).entries;
    if (gamma > 1) merge_factor(order_factors, p, gamma - 1);

    return reduce_order<u128>(group_order, order_factors,
                              [&](u128 t) { return pow_mod(a, t, modulus) == 1; });
}

u128 checked_pow(u64 p, u32 e) {
    if (p == 0) throw std::domain_error("checked_pow: zero base");
    u128 result = 1;
    for (u32 i = 0; i < e; ++i) {
        if (result > kMaxModulus / p) {
            throw std::overflow_error("checked_pow: power exceeds the 127-bit working range");
        }
        result *= p;
    }
    return result;
}

u64 lcm_all(std::span<const u64> values) {
    u64 acc = 1;
    for (u64 v : values) {
        if (v == 0) throw std::domain_error("lcm_all: zero has no lcm");
        const u64 q = v / std::gcd(acc, v);
        u64 next = 0;
        if (__builtin_mul_overflow(acc, q, &next)) {
            throw std::overflow_error("lcm_all: result exceeds 64 bits");
        }
        acc = next;
    }
    return acc;
}

u128 lcm_u128(u128 a, u128 b) {
    if (a == 0 || b == 0) throw std::domain_error("lcm_u128: zero has no lcm");
    const u128 q = a / gcd_u128(a, b);
    if (b > ~u128{0} / q) {
        throw std::overflow_error("lcm_u128: result exceeds 128 bits");
    }
    return q * b;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
    u128 acc = 0;
    constexpr u128 kMax = ~u128{0};
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("parse_u128: not a digit");
        const unsigned d = static_cast<unsigned>(ch - '0');
        if (acc > (kMax - d) / 10) throw std::out_of_range("parse_u128: overflow");
        acc = acc * 10 + d;
    }
    return acc;
}

}  // namespace vpal
