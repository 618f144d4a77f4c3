#include "vpal/sequences.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "vpal/parallel.hpp"

namespace vpal {

namespace {

bool qualifies_for_repetition(u64 n) {
    return n > 0 && n % 10 != 0 && reverse_digits(n) != n;
}

}  // namespace

std::vector<SequenceRecord> gen_v_values(u64 limit, VMode mode) {
    std::vector<SequenceRecord> out;
    out.reserve(limit);
    for (u64 n = 1; n <= limit; ++n) out.push_back({n, v_value(n, mode)});
    return out;
}

std::vector<u64> gen_v_palindromic(u64 limit, VMode mode) {
    std::vector<u64> out;
    for (u64 n = 1; n <= limit; ++n) {
        if (is_v_palindromic(n, mode)) out.push_back(n);
    }
    return out;
}

FiniteOrderScan gen_finite_order(u64 limit, u64 scan_cap, OrderTable& table, VMode mode) {
    FiniteOrderScan out;
    for (u64 n = 1; n <= limit; ++n) {
        if (!qualifies_for_repetition(n)) continue;
        const CompiledPredicate pred = compile_predicate(n, table, mode);
        try {
            if (PredicateCycle(pred, scan_cap).first_true()) out.finite.push_back(n);
        } catch (const ScanBudgetExceeded&) {
            out.undecided.push_back(n);
        }
    }
    return out;
}

DensityReport density_scan(u64 limit, u64 scan_cap, OrderTable& table, VMode mode) {
    DensityReport report;
    report.limit = limit;

    std::vector<u64> members;
    for (u64 n = 1; n <= limit; ++n) {
        if (n % 10 == 0) continue;
        if (reverse_digits(n) <= n) continue;
        members.push_back(n);
    }
    report.count_s = members.size();

    enum class Verdict : unsigned char { has_order, no_order, undecided };
    std::vector<Verdict> verdicts(members.size(), Verdict::undecided);
    parallel_for(members.size(), [&](u64 i) {
        const CompiledPredicate pred = compile_predicate(members[i], table, mode);
        try {
            verdicts[i] = PredicateCycle(pred, scan_cap).first_true()
                              ? Verdict::has_order
                              : Verdict::no_order;
        } catch (const ScanBudgetExceeded&) {
            verdicts[i] = Verdict::undecided;
        }
    });

    for (Verdict v : verdicts) {
        if (v == Verdict::no_order) ++report.count_t;
        if (v == Verdict::undecided) ++report.undecided;
    }
    if (report.count_s > 0) {
        report.ratio = static_cast<double>(report.count_t) / static_cast<double>(report.count_s);
    }
    return report;
}

std::vector<FamilyMember> check_fourfold_reversal_family(u32 count, OrderTable& table) {
    std::vector<FamilyMember> out;
    for (u32 m = 1; m <= count; ++m) {
        const std::string digits = "21" + std::string(m - 1, '9') + "78";
        const auto value = BigInt::from_decimal(digits).to_u64();
        if (!value || reverse_digits(*value) >= kFactorLimit) {
            throw std::domain_error("check_fourfold_reversal_family: member exceeds 2^63");
        }
        FamilyMember member;
        member.value = *value;
        member.reverse_ratio = reverse_ratio(*value);
        const CompiledPredicate pred = compile_predicate(*value, table, VMode::standard);
        member.order_infinite = !PredicateCycle(pred).first_true().has_value();
        out.push_back(member);
    }
    return out;
}

std::vector<PeriodReport> period_table(u64 lo, u64 hi, u64 scan_cap, OrderTable& table,
                                       VMode mode) {
    std::vector<u64> rows;
    for (u64 n = lo; n <= hi && n > 0; ++n) {
        if (n % 10 == 0) continue;
        if (reverse_digits(n) <= n) continue;
        rows.push_back(n);
    }

    std::vector<PeriodReport> reports(rows.size());
    parallel_for(rows.size(), [&](u64 i) {
        const CompiledPredicate pred = compile_predicate(rows[i], table, mode);
        reports[i] = period_report(pred, scan_cap);
    });
    return reports;
}

void emit_bfile(std::ostream& out, std::span<const SequenceRecord> records) {
    for (const auto& r : records) {
        out << r.index << ' ' << r.value << '\n';
    }
}

}  // namespace vpal
