#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "vpal/predicate.hpp"

namespace vpal {

struct SequenceRecord {
    u64 index = 0;  // 1-based
    u64 value = 0;

    friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// (n, v(n)) for n = 1..limit.
std::vector<SequenceRecord> gen_v_values(u64 limit, VMode mode = VMode::standard);

/// All v-palindromic numbers up to limit, ascending.
std::vector<u64> gen_v_palindromic(u64 limit, VMode mode = VMode::standard);

struct FiniteOrderScan {
    std::vector<u64> finite;     // some repetition count works
    std::vector<u64> undecided;  // omega_f beyond the scan cap; never classified
};

/// Numbers n <= limit (10 not dividing n, n != r(n)) for which some c-fold
/// repetition is v-palindromic.
FiniteOrderScan gen_finite_order(u64 limit, u64 scan_cap, OrderTable& table,
                                 VMode mode = VMode::standard);

struct DensityReport {
    u64 limit = 0;
    u64 count_s = 0;  // n <= limit with 10 not dividing n and n < r(n)
    u64 count_t = 0;  // those decided to admit no c at all
    u64 undecided = 0;
    std::optional<double> ratio;  // count_t / count_s, empty when S is empty
};

DensityReport density_scan(u64 limit, u64 scan_cap, OrderTable& table,
                           VMode mode = VMode::standard);

struct FamilyMember {
    u64 value = 0;
    std::optional<u64> reverse_ratio;
    bool order_infinite = false;
};

/// Members "21", m-1 nines, "78" of the family whose reversal is exactly
/// four times the member. Every member's repetition order is infinite for
/// a structural reason: the only differing prime is 2.
std::vector<FamilyMember> check_fourfold_reversal_family(u32 count, OrderTable& table);

/// Period data for every qualifying n in [lo, hi] (10 not dividing n and
/// n < r(n)), ascending.
std::vector<PeriodReport> period_table(u64 lo, u64 hi, u64 scan_cap,
                                       OrderTable& table,
                                       VMode mode = VMode::standard);

/// "index value" lines, 1-based.
void emit_bfile(std::ostream& out, std::span<const SequenceRecord> records);

}  // namespace vpal
