#include "vpal/predicate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vpal {

DifferingProfile differing_profile(u64 n) {
    if (n == 0 || n % 10 == 0) {
        throw std::domain_error("differing_profile: n must be positive and not a multiple of 10");
    }
    const u64 rev = reverse_digits(n);
    if (rev == n) {
        throw std::domain_error("differing_profile: palindromes have no differing primes");
    }

    DifferingProfile out;
    out.n = n;
    out.reversed = rev;
    out.digit_count = std::to_string(n).size();

    const Factorization fn = factorize(n);
    const Factorization fr = factorize(rev);
    std::size_t i = 0, j = 0;
    auto push = [&out](u64 p, u32 ef, u32 er) {
        if (ef == er) return;
        out.entries.push_back({p, ef, er, static_cast<i64>(ef) - static_cast<i64>(er),
                               std::min(ef, er)});
    };
    while (i < fn.entries.size() || j < fr.entries.size()) {
        if (j == fr.entries.size() ||
            (i < fn.entries.size() && fn.entries[i].prime < fr.entries[j].prime)) {
            push(fn.entries[i].prime, fn.entries[i].exponent, 0);
            ++i;
        } else if (i == fn.entries.size() || fr.entries[j].prime < fn.entries[i].prime) {
            push(fr.entries[j].prime, 0, fr.entries[j].exponent);
            ++j;
        } else {
            push(fn.entries[i].prime, fn.entries[i].exponent, fr.entries[j].exponent);
            ++i;
            ++j;
        }
    }
    return out;
}

u64 phi(u64 p, u32 delta, u64 alpha, VMode mode) {
    if (delta == 0) throw std::domain_error("phi: delta must be positive");
    if (mode == VMode::vprime) {
        return alpha == 0 ? p + delta : delta;
    }
    if (delta == 1) {
        if (p == 2) return alpha <= 1 ? 2 : 1;
        if (alpha == 0) return p;
        return alpha == 1 ? 2 : 1;
    }
    if (alpha == 0) return p + delta;
    return alpha == 1 ? u64{delta} + 1 : delta;
}

std::vector<u64> range_set(u64 p, u32 delta, VMode mode) {
    if (delta == 0) throw std::domain_error("range_set: delta must be positive");
    if (mode == VMode::vprime) return {p + delta, delta};
    if (delta == 1) {
        if (p == 2) return {2, 1};
        return {p, 2, 1};
    }
    return {p + u64{delta}, u64{delta} + 1, delta};
}

AlphaFiber fiber(u64 p, u32 delta, u64 u, VMode mode) {
    if (delta == 0) throw std::domain_error("fiber: delta must be positive");
    if (mode == VMode::vprime) {
        if (u == p + delta) return AlphaFiber::zero;
        if (u == delta) return AlphaFiber::one_or_more;
    } else if (delta == 1) {
        if (p == 2) {
            if (u == 2) return AlphaFiber::zero_or_one;
            if (u == 1) return AlphaFiber::two_or_more;
        } else {
            if (u == p) return AlphaFiber::zero;
            if (u == 2) return AlphaFiber::one;
            if (u == 1) return AlphaFiber::two_or_more;
        }
    } else {
        if (u == p + u64{delta}) return AlphaFiber::zero;
        if (u == u64{delta} + 1) return AlphaFiber::one;
        if (u == delta) return AlphaFiber::two_or_more;
    }
    throw std::domain_error("fiber: value outside the range set");
}

namespace {

struct SolveFrame {
    std::vector<std::vector<u64>> ranges;
    std::vector<int> signs;
    std::vector<i128> suffix_min;
    std::vector<i128> suffix_max;
    std::vector<std::vector<u64>> found;
    std::vector<u64> current;
};

void solve_rec(SolveFrame& fr, std::size_t j, i128 partial) {
    const std::size_t t = fr.ranges.size();
    if (j == t) {
        if (partial == 0) fr.found.push_back(fr.current);
        return;
    }
    if (partial + fr.suffix_min[j] > 0) return;
    if (partial + fr.suffix_max[j] < 0) return;
    for (u64 u : fr.ranges[j]) {
        fr.current.push_back(u);
        solve_rec(fr, j + 1, partial + fr.signs[j] * i128{u});
        fr.current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<u64>> solve_u(const DifferingProfile& profile, VMode mode) {
    SolveFrame fr;
    const std::size_t t = profile.entries.size();
    fr.ranges.reserve(t);
    fr.signs.reserve(t);
    for (const auto& e : profile.entries) {
        const u32 abs_delta = static_cast<u32>(e.delta < 0 ? -e.delta : e.delta);
        fr.ranges.push_back(range_set(e.prime, abs_delta, mode));
        fr.signs.push_back(e.delta < 0 ? -1 : 1);
    }

    fr.suffix_min.assign(t + 1, 0);
    fr.suffix_max.assign(t + 1, 0);
    for (std::size_t j = t; j-- > 0;) {
        i128 lo = fr.signs[j] * i128{fr.ranges[j].front()};
        i128 hi = lo;
        for (u64 u : fr.ranges[j]) {
            const i128 contrib = fr.signs[j] * i128{u};
            lo = std::min(lo, contrib);
            hi = std::max(hi, contrib);
        }
        fr.suffix_min[j] = fr.suffix_min[j + 1] + lo;
        fr.suffix_max[j] = fr.suffix_max[j + 1] + hi;
    }

    solve_rec(fr, 0, 0);
    return std::move(fr.found);
}

GCondition g_condition(AlphaFiber f, u32 min_exp) {
    switch (f) {
        case AlphaFiber::zero:
            return min_exp == 0 ? GCondition::eq_zero : GCondition::impossible;
        case AlphaFiber::one:
            if (min_exp == 0) return GCondition::eq_one;
            return min_exp == 1 ? GCondition::eq_zero : GCondition::impossible;
        case AlphaFiber::zero_or_one:
            if (min_exp == 0) return GCondition::le_one;
            return min_exp == 1 ? GCondition::eq_zero : GCondition::impossible;
        case AlphaFiber::two_or_more:
            if (min_exp == 0) return GCondition::ge_two;
            return min_exp == 1 ? GCondition::ge_one : GCondition::always;
        case AlphaFiber::one_or_more:
            return min_exp == 0 ? GCondition::ge_one : GCondition::always;
    }
    throw std::logic_error("g_condition: unreachable");
}

bool CAtom::holds_at(u64 c) const {
    switch (kind) {
        case Kind::not_div:
            return u128{c} % modulus != 0;
        case Kind::div:
            return u128{c} % modulus == 0;
        case Kind::div_and_not_div:
            return u128{c} % modulus == 0 && u128{c} % modulus2 != 0;
        case Kind::always:
            return true;
        case Kind::impossible:
            return false;
    }
    throw std::logic_error("CAtom: unreachable");
}

CAtom c_atom(u64 p, u64 k, GCondition gc, OrderTable& table) {
    CAtom atom;
    atom.prime = p;
    if (gc == GCondition::always) {
        atom.kind = CAtom::Kind::always;
        return atom;
    }
    if (gc == GCondition::impossible) {
        atom.kind = CAtom::Kind::impossible;
        return atom;
    }
    if (p == 2 || p == 5) {
        // repetition numbers end in 1, so ord_p(rho) == 0 identically
        const bool satisfied_by_zero = gc == GCondition::eq_zero || gc == GCondition::le_one;
        atom.kind = satisfied_by_zero ? CAtom::Kind::always : CAtom::Kind::impossible;
        return atom;
    }
    switch (gc) {
        case GCondition::eq_zero:
            atom.kind = CAtom::Kind::not_div;
            atom.modulus = h_value(p, 1, k, table);
            break;
        case GCondition::eq_one:
            atom.kind = CAtom::Kind::div_and_not_div;
            atom.modulus = h_value(p, 1, k, table);
            atom.modulus2 = h_value(p, 2, k, table);
            break;
        case GCondition::le_one:
            atom.kind = CAtom::Kind::not_div;
            atom.modulus = h_value(p, 2, k, table);
            break;
        case GCondition::ge_one:
            atom.kind = CAtom::Kind::div;
            atom.modulus = h_value(p, 1, k, table);
            break;
        case GCondition::ge_two:
            atom.kind = CAtom::Kind::div;
            atom.modulus = h_value(p, 2, k, table);
            break;
        default:
            throw std::logic_error("c_atom: unreachable");
    }
    return atom;
}

bool CompiledPredicate::constant_true() const {
    for (const auto& cl : clauses) {
        if (cl.atoms.empty()) return true;
    }
    return false;
}

CompiledPredicate compile_predicate(u64 n, OrderTable& table, VMode mode) {
    CompiledPredicate pred;
    pred.profile = differing_profile(n);
    pred.mode = mode;
    const u64 k = pred.profile.digit_count;

    for (const auto& solution : solve_u(pred.profile, mode)) {
        Clause clause;
        clause.solution = solution;
        bool dead = false;
        for (std::size_t j = 0; j < pred.profile.entries.size(); ++j) {
            const auto& e = pred.profile.entries[j];
            const u32 abs_delta = static_cast<u32>(e.delta < 0 ? -e.delta : e.delta);
            const AlphaFiber f = fiber(e.prime, abs_delta, solution[j], mode);
            const GCondition gc = g_condition(f, e.min_exp);
            const CAtom atom = c_atom(e.prime, k, gc, table);
            if (atom.kind == CAtom::Kind::impossible) {
                dead = true;
                break;
            }
            if (atom.kind != CAtom::Kind::always) clause.atoms.push_back(atom);
        }
        if (!dead) pred.clauses.push_back(std::move(clause));
    }

    u128 w = 1;
    for (const auto& e : pred.profile.entries) {
        if (e.prime == 2 || e.prime == 5) continue;
        w = lcm_u128(w, h_value(e.prime, 1, k, table));
        w = lcm_u128(w, h_value(e.prime, 2, k, table));
    }
    pred.omega_f = w;
    return pred;
}

bool evaluate(const CompiledPredicate& pred, u64 c) {
    if (c == 0) throw std::domain_error("evaluate: repetition count must be positive");
    for (const auto& clause : pred.clauses) {
        bool all = true;
        for (const auto& atom : clause.atoms) {
            if (!atom.holds_at(c)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

ScanBudgetExceeded::ScanBudgetExceeded(u128 omega_f_, u64 cap_)
    : std::runtime_error("scan budget exceeded: omega_f=" + to_string(omega_f_) +
                         " cap=" + std::to_string(cap_)),
      omega_f(omega_f_),
      cap(cap_) {}

PredicateCycle::PredicateCycle(const CompiledPredicate& pred, u64 scan_cap) {
    if (pred.constant_false() || pred.constant_true()) {
        length_ = 1;
        bits_.assign(1, pred.constant_true());
        return;
    }
    if (pred.omega_f > scan_cap) {
        throw ScanBudgetExceeded(pred.omega_f, scan_cap);
    }
    length_ = static_cast<u64>(pred.omega_f);
    bits_.resize(length_);
    for (u64 c = 1; c <= length_; ++c) bits_[c - 1] = evaluate(pred, c);
}

bool PredicateCycle::value(u64 c) const {
    if (c == 0) throw std::domain_error("PredicateCycle: repetition count must be positive");
    return bits_[(c - 1) % length_];
}

bool PredicateCycle::is_period(u64 w) const {
    if (w == 0) throw std::domain_error("PredicateCycle: period must be positive");
    const u64 shift = w % length_;
    if (shift == 0) return true;
    for (u64 i = 0; i < length_; ++i) {
        u64 j = i + shift;
        if (j >= length_) j -= length_;
        if (bits_[i] != bits_[j]) return false;
    }
    return true;
}

u64 PredicateCycle::min_period() const {
    std::vector<u64> divisors{1};
    for (const auto& f : factorize(length_).entries) {
        const std::size_t existing = divisors.size();
        u64 power = 1;
        for (u32 e = 1; e <= f.exponent; ++e) {
            power *= f.prime;
            for (std::size_t i = 0; i < existing; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    for (u64 d : divisors) {
        if (is_period(d)) return d;
    }
    throw std::logic_error("min_period: unreachable, the length itself is a period");
}

std::optional<u64> PredicateCycle::first_true() const {
    for (u64 i = 0; i < length_; ++i) {
        if (bits_[i]) return i + 1;
    }
    return std::nullopt;
}

u64 omega(const CompiledPredicate& pred, u64 scan_cap) {
    return PredicateCycle(pred, scan_cap).min_period();
}

std::optional<u64> order_c(const CompiledPredicate& pred, u64 scan_cap) {
    return PredicateCycle(pred, scan_cap).first_true();
}

bool is_period(const CompiledPredicate& pred, u64 w, u64 scan_cap) {
    return PredicateCycle(pred, scan_cap).is_period(w);
}

PeriodReport period_report(const CompiledPredicate& pred, u64 scan_cap) {
    const PredicateCycle cycle(pred, scan_cap);
    PeriodReport report;
    report.n = pred.profile.n;
    report.omega_f = pred.omega_f;
    report.omega = cycle.min_period();
    report.order = cycle.first_true();
    return report;
}

}  // namespace vpal
