#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "vpal/repeat.hpp"
#include "vpal/vcore.hpp"

namespace vpal {

// Whether the c-fold digit repetition of n is v-palindromic depends on c
// only through divisibility conditions. Writing N = n * rho(c, k) and
// R = r(n) * rho(c, k) for k the digit count of n, the primes shared by n
// and r(n) with equal exponents contribute equally to v(N) and v(R), so the
// decision rests on the primes where the exponents differ. For each such
// prime the contribution difference phi_{p,|delta|}(alpha) depends on
// alpha = ord_p(rho) only through a two or three valued closed form, and
// which value it takes is controlled by whether h_{p,k} and h_{p^2,k}
// divide c. Solving for the value combinations that cancel exactly and
// translating each combination back through those h divisibilities compiles
// the whole question into a disjunction of conjunctions of conditions
// "m | c" / "m does not divide c".

struct ProfileEntry {
    u64 prime = 0;
    u32 exp_fwd = 0;  // exponent in n
    u32 exp_rev = 0;  // exponent in r(n)
    i64 delta = 0;    // exp_fwd - exp_rev, never zero
    u32 min_exp = 0;

    friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// The primes carrying different exponents in n and r(n), ascending.
struct DifferingProfile {
    u64 n = 0;
    u64 reversed = 0;
    u64 digit_count = 0;
    std::vector<ProfileEntry> entries;
};

/// Requires n >= 1, 10 does not divide n, and n != r(n).
DifferingProfile differing_profile(u64 n);

/// phi_{p,delta}(alpha) = v(p^(alpha+delta)) - v(p^alpha), by closed form.
/// Requires delta >= 1.
u64 phi(u64 p, u32 delta, u64 alpha, VMode mode = VMode::standard);

/// The values phi_{p,delta} attains, listed from alpha = 0 upward.
std::vector<u64> range_set(u64 p, u32 delta, VMode mode = VMode::standard);

/// Preimage of a single value u under phi_{p,delta}: alpha is pinned to 0,
/// pinned to 1, confined to {0, 1}, or only bounded below.
enum class AlphaFiber { zero, one, zero_or_one, two_or_more, one_or_more };

/// Requires u to lie in range_set(p, delta, mode).
AlphaFiber fiber(u64 p, u32 delta, u64 u, VMode mode = VMode::standard);

/// All tuples from the product of the entries' range sets whose
/// sign-weighted sum vanishes: sum of sgn(delta_j) * u_j == 0. Raw
/// solutions; feasibility pruning happens during compilation.
std::vector<std::vector<u64>> solve_u(const DifferingProfile& profile,
                                      VMode mode = VMode::standard);

/// Constraint on g = ord_p(rho) after shifting a fiber by the smaller of
/// the two exponents of p in n and r(n).
enum class GCondition { eq_zero, eq_one, le_one, ge_one, ge_two, always, impossible };

GCondition g_condition(AlphaFiber f, u32 min_exp);

/// Divisibility condition on c equivalent to one GCondition at one prime.
struct CAtom {
    enum class Kind { not_div, div, div_and_not_div, always, impossible };

    Kind kind = Kind::always;
    u64 prime = 0;      // profile prime the atom came from
    u128 modulus = 0;   // h_{p,k} or h_{p^2,k}
    u128 modulus2 = 0;  // second modulus for div_and_not_div (modulus | modulus2)

    bool holds_at(u64 c) const;

    friend bool operator==(const CAtom&, const CAtom&) = default;
};

/// Translates a g-condition at prime p into divisibility of c. g = 0 means
/// h_{p,k} does not divide c; g >= 1 means it does; g >= 2 brings in
/// h_{p^2,k}. For p in {2, 5} the order in rho is identically zero, so the
/// atom collapses to always or impossible.
CAtom c_atom(u64 p, u64 k, GCondition gc, OrderTable& table);

struct Clause {
    std::vector<u64> solution;  // the u tuple, one value per profile entry
    std::vector<CAtom> atoms;   // constant atoms pruned; empty means true
};

struct CompiledPredicate {
    DifferingProfile profile;
    VMode mode = VMode::standard;
    std::vector<Clause> clauses;  // disjunction; empty means constantly false
    u128 omega_f = 1;             // constructive period

    bool constant_false() const { return clauses.empty(); }
    bool constant_true() const;
};

/// Compiles the repetition question for n: afterwards evaluate(pred, c)
/// decides "is the c-fold repetition of n v-palindromic" for every c >= 1
/// in O(atoms) time. omega_f is the lcm of h_{p,k} and h_{p^2,k} over the
/// differing primes other than 2 and 5, a period of the predicate whether
/// or not those primes survive into any clause.
CompiledPredicate compile_predicate(u64 n, OrderTable& table,
                                    VMode mode = VMode::standard);

bool evaluate(const CompiledPredicate& pred, u64 c);

inline constexpr u64 kDefaultScanCap = 100'000'000;

struct ScanBudgetExceeded : std::runtime_error {
    ScanBudgetExceeded(u128 omega_f, u64 cap);

    u128 omega_f;
    u64 cap;
};

/// One full cycle of predicate values, the basis for every period query.
/// Constant predicates take the exact shortcut (cycle length 1) and are
/// never subject to the scan cap; anything else materializes omega_f bits
/// and throws ScanBudgetExceeded when omega_f exceeds the cap.
class PredicateCycle {
public:
    explicit PredicateCycle(const CompiledPredicate& pred,
                            u64 scan_cap = kDefaultScanCap);

    u64 length() const { return length_; }
    bool value(u64 c) const;  // c >= 1

    /// Whether w is a period: value(c + w) == value(c) for all c >= 1.
    bool is_period(u64 w) const;

    /// The minimal period. Any two periods of an infinite sequence have
    /// their gcd as a period, so the minimal period divides the cycle
    /// length and only its divisors need checking.
    u64 min_period() const;

    /// Least c >= 1 with value(c) true, empty when no c works.
    std::optional<u64> first_true() const;

private:
    u64 length_ = 1;
    std::vector<bool> bits_;
};

u64 omega(const CompiledPredicate& pred, u64 scan_cap = kDefaultScanCap);
std::optional<u64> order_c(const CompiledPredicate& pred, u64 scan_cap = kDefaultScanCap);
bool is_period(const CompiledPredicate& pred, u64 w, u64 scan_cap = kDefaultScanCap);

struct PeriodReport {
    u64 n = 0;
    u128 omega_f = 1;
    u64 omega = 1;
    std::optional<u64> order;  // least c, empty means none exists
};

PeriodReport period_report(const CompiledPredicate& pred,
                           u64 scan_cap = kDefaultScanCap);

}  // namespace vpal
