#include "vpal/oracle.hpp"

#include <stdexcept>

namespace vpal {

namespace {

OracleVerdict direct_verdict(const DifferingProfile& profile, u64 c, VMode mode) {
    if (c == 0) throw std::domain_error("check_repeat_direct: c must be positive");
    if (profile.digit_count > kMaxOracleDigits / c) {
        throw std::domain_error("check_repeat_direct: repetition exceeds the oracle digit budget");
    }

    OracleVerdict out;
    out.n = profile.n;
    out.c = c;
    out.method = OracleVerdict::Method::direct_order;

    const BigInt repetition_unit = rho(c, profile.digit_count);
    i128 signed_sum = 0;
    for (const auto& e : profile.entries) {
        const u32 g = padic_valuation(repetition_unit, e.prime);
        out.g_values.emplace_back(e.prime, g);
        signed_sum += i128{v_prime_power(e.prime, u64{e.exp_fwd} + g, mode)};
        signed_sum -= i128{v_prime_power(e.prime, u64{e.exp_rev} + g, mode)};
    }
    out.verdict = signed_sum == 0;
    return out;
}

}  // namespace

OracleVerdict check_repeat_direct(u64 n, u64 c, VMode mode) {
    return direct_verdict(differing_profile(n), c, mode);
}

OracleVerdict check_full_factor(u64 n, u64 c, VMode mode) {
    if (n == 0 || n % 10 == 0) {
        throw std::domain_error("check_full_factor: n must be positive and not a multiple of 10");
    }
    const BigInt repetition = repeat_number(n, c);
    const auto value = repetition.to_u64();
    if (!value || *value >= kFactorLimit) {
        throw std::domain_error("check_full_factor: repetition exceeds the factorization bound");
    }

    OracleVerdict out;
    out.n = n;
    out.c = c;
    out.method = OracleVerdict::Method::full_factor;
    out.verdict = is_v_palindromic(*value, mode);
    return out;
}

CrossValidateReport cross_validate(u64 n_lo, u64 n_hi, u64 c_max, OrderTable& table,
                                   VMode mode) {
    CrossValidateReport report;
    for (u64 n = n_lo; n <= n_hi && n > 0; ++n) {
        if (n % 10 == 0) continue;
        const u64 rev = reverse_digits(n);
        if (rev == n) continue;

        const CompiledPredicate pred = compile_predicate(n, table, mode);
        const u64 digits = pred.profile.digit_count;
        for (u64 c = 1; c <= c_max; ++c) {
            const bool fast = evaluate(pred, c);
            const OracleVerdict direct = direct_verdict(pred.profile, c, mode);
            std::optional<bool> full;
            if (digits * c <= 18) {
                full = check_full_factor(n, c, mode).verdict;
            }
            ++report.checked;
            if (fast != direct.verdict || (full && *full != direct.verdict)) {
                report.disagreements.push_back({n, c, fast, direct.verdict, full});
            }
        }
    }
    return report;
}

}  // namespace vpal
