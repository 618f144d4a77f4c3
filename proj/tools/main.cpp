#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vpal/cache.hpp"
#include "vpal/oracle.hpp"
#include "vpal/parallel.hpp"
#include "vpal/sequences.hpp"
#include "vpal/version.hpp"

namespace {

using nlohmann::json;
using namespace vpal;

struct CommonOpts {
    bool json_out = false;
    bool csv_out = false;
    bool bfile_out = false;
    bool vprime = false;
    u64 scan_cap = kDefaultScanCap;
    std::string cache_dir;
};

VMode mode_of(const CommonOpts& opts) {
    return opts.vprime ? VMode::vprime : VMode::standard;
}

std::filesystem::path cache_dir_of(const CommonOpts& opts) {
    return opts.cache_dir.empty() ? default_cache_dir()
                                  : std::filesystem::path(opts.cache_dir);
}

json json_u128(u128 v) {
    if (v <= u128{~u64{0}}) return static_cast<u64>(v);
    return to_string(v);
}

json json_order(const std::optional<u64>& order) {
    if (order) return *order;
    return nullptr;
}

std::string render_order(const std::optional<u64>& order) {
    return order ? std::to_string(*order) : "inf";
}

std::string render_atom(const CAtom& atom) {
    switch (atom.kind) {
        case CAtom::Kind::not_div:
            return to_string(atom.modulus) + " !| c";
        case CAtom::Kind::div:
            return to_string(atom.modulus) + " | c";
        case CAtom::Kind::div_and_not_div:
            return to_string(atom.modulus) + " | c and " + to_string(atom.modulus2) + " !| c";
        case CAtom::Kind::always:
            return "true";
        case CAtom::Kind::impossible:
            return "false";
    }
    return "?";
}

std::string render_clause(const Clause& clause) {
    std::ostringstream out;
    out << "u=(";
    for (std::size_t i = 0; i < clause.solution.size(); ++i) {
        if (i > 0) out << ',';
        out << clause.solution[i];
    }
    out << "): ";
    if (clause.atoms.empty()) {
        out << "true";
        return out.str();
    }
    for (std::size_t i = 0; i < clause.atoms.size(); ++i) {
        if (i > 0) out << " and ";
        out << render_atom(clause.atoms[i]);
    }
    return out.str();
}

const char* atom_kind_name(CAtom::Kind kind) {
    switch (kind) {
        case CAtom::Kind::not_div: return "not_div";
        case CAtom::Kind::div: return "div";
        case CAtom::Kind::div_and_not_div: return "div_and_not_div";
        case CAtom::Kind::always: return "always";
        case CAtom::Kind::impossible: return "impossible";
    }
    return "?";
}

json clause_json(const Clause& clause) {
    json atoms = json::array();
    for (const auto& atom : clause.atoms) {
        json a{{"prime", atom.prime}, {"kind", atom_kind_name(atom.kind)}};
        if (atom.kind != CAtom::Kind::always && atom.kind != CAtom::Kind::impossible) {
            a["modulus"] = json_u128(atom.modulus);
        }
        if (atom.kind == CAtom::Kind::div_and_not_div) {
            a["modulus2"] = json_u128(atom.modulus2);
        }
        atoms.push_back(std::move(a));
    }
    return json{{"u", clause.solution}, {"atoms", std::move(atoms)}};
}

void print_json(const json& j) {
    std::cout << j.dump(2) << '\n';
}

// Cache hits must be indistinguishable from recomputation: a stored record
// is only used when the cold path would have produced it, meaning the
// predicate is constant or its full cycle fits the current scan cap.
bool cache_usable(const std::optional<ResultRecord>& cached, const CompiledPredicate& pred,
                  u64 scan_cap) {
    if (!cached || cached->omega_f != pred.omega_f) return false;
    if (pred.constant_false() || pred.constant_true()) return true;
    return pred.omega_f <= scan_cap;
}

int cmd_v(u64 n, const CommonOpts& opts) {
    if (n == 0 || n % 10 == 0) {
        throw std::domain_error("v: n must be positive and not a multiple of 10");
    }
    const u64 value = v_value(n, mode_of(opts));
    if (opts.json_out) {
        print_json({{"n", n}, {"v", value}, {"mode", to_string(mode_of(opts))}});
    } else {
        std::cout << value << '\n';
    }
    return 0;
}

int cmd_check(u64 n, const CommonOpts& opts) {
    if (n == 0 || n % 10 == 0) {
        throw std::domain_error("check: n must be positive and not a multiple of 10");
    }
    const u64 rev = reverse_digits(n);
    if (rev == n) throw std::domain_error("check: palindromes are excluded");
    const VMode mode = mode_of(opts);
    const u64 v_n = v_value(n, mode);
    const u64 v_r = v_value(rev, mode);
    if (opts.json_out) {
        print_json({{"n", n},
                    {"reversed", rev},
                    {"v", v_n},
                    {"v_reversed", v_r},
                    {"v_palindromic", v_n == v_r},
                    {"mode", to_string(mode)}});
    } else {
        std::cout << "v-palindromic: " << (v_n == v_r ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_period(u64 n, const CommonOpts& opts) {
    const auto dir = cache_dir_of(opts);
    const VMode mode = mode_of(opts);
    OrderTable table;
    load_order_cache(dir, table);
    ResultCache results;
    results.load(dir);

    const CompiledPredicate pred = compile_predicate(n, table, mode);
    save_order_cache(dir, table);

    PeriodReport report;
    if (const auto cached = results.lookup(n, mode);
        cache_usable(cached, pred, opts.scan_cap)) {
        report = {n, cached->omega_f, cached->omega, cached->order};
    } else {
        report = period_report(pred, opts.scan_cap);
        results.put({report.n, report.omega_f, report.omega, report.order, mode});
        results.save(dir);
    }

    if (opts.json_out) {
        json clauses = json::array();
        for (const auto& clause : pred.clauses) clauses.push_back(clause_json(clause));
        print_json({{"n", n},
                    {"mode", to_string(mode)},
                    {"k", pred.profile.digit_count},
                    {"omega_f", json_u128(report.omega_f)},
                    {"omega", report.omega},
                    {"c", json_order(report.order)},
                    {"clauses", std::move(clauses)}});
    } else {
        std::cout << "n: " << n << '\n'
                  << "mode: " << to_string(mode) << '\n'
                  << "k: " << pred.profile.digit_count << '\n'
                  << "omega_f: " << to_string(report.omega_f) << '\n'
                  << "omega: " << report.omega << '\n'
                  << "c: " << render_order(report.order) << '\n'
                  << "clauses:" << '\n';
        for (const auto& clause : pred.clauses) {
            std::cout << "  " << render_clause(clause) << '\n';
        }
    }
    return 0;
}

int cmd_table(u64 lo, u64 hi, const CommonOpts& opts) {
    const auto dir = cache_dir_of(opts);
    const VMode mode = mode_of(opts);
    OrderTable table;
    load_order_cache(dir, table);
    ResultCache results;
    results.load(dir);

    std::vector<u64> rows;
    for (u64 n = lo; n <= hi && n > 0; ++n) {
        if (n % 10 == 0) continue;
        if (reverse_digits(n) <= n) continue;
        rows.push_back(n);
    }

    std::vector<CompiledPredicate> preds;
    preds.reserve(rows.size());
    for (u64 n : rows) preds.push_back(compile_predicate(n, table, mode));
    save_order_cache(dir, table);

    std::vector<PeriodReport> reports(rows.size());
    std::vector<bool> fresh(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (const auto cached = results.lookup(rows[i], mode);
            cache_usable(cached, preds[i], opts.scan_cap)) {
            reports[i] = {rows[i], cached->omega_f, cached->omega, cached->order};
        } else {
            fresh[i] = true;
        }
    }
    parallel_for(rows.size(), [&](u64 i) {
        if (fresh[i]) reports[i] = period_report(preds[i], opts.scan_cap);
    });
    bool any_fresh = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!fresh[i]) continue;
        results.put({reports[i].n, reports[i].omega_f, reports[i].omega, reports[i].order, mode});
        any_fresh = true;
    }
    if (any_fresh) results.save(dir);

    if (opts.json_out) {
        json out = json::array();
        for (const auto& r : reports) {
            out.push_back({{"n", r.n},
                           {"omega_f", json_u128(r.omega_f)},
                           {"omega", r.omega},
                           {"c", json_order(r.order)}});
        }
        print_json(out);
    } else if (opts.csv_out) {
        std::cout << "n,omega_f,omega,c\n";
        for (const auto& r : reports) {
            std::cout << r.n << ',' << to_string(r.omega_f) << ',' << r.omega << ','
                      << render_order(r.order) << '\n';
        }
    } else {
        std::cout << std::left << std::setw(8) << "n" << std::setw(14) << "omega_f"
                  << std::setw(14) << "omega" << "c" << '\n';
        for (const auto& r : reports) {
            std::cout << std::left << std::setw(8) << r.n << std::setw(14)
                      << to_string(r.omega_f) << std::setw(14) << r.omega
                      << render_order(r.order) << '\n';
        }
    }
    return 0;
}

int cmd_orders(u64 p, u32 alpha, u64 k, const CommonOpts& opts) {
    const auto dir = cache_dir_of(opts);
    OrderTable table;
    load_order_cache(dir, table);
    const OrderEntry entry = h_entry(p, alpha, k, table);
    save_order_cache(dir, table);

    if (opts.json_out) {
        print_json({{"p", p},
                    {"alpha", alpha},
                    {"k", k},
                    {"beta", entry.beta},
                    {"h", json_u128(entry.h)}});
    } else {
        std::cout << "p: " << p << '\n'
                  << "alpha: " << alpha << '\n'
                  << "k: " << k << '\n'
                  << "beta: " << entry.beta << '\n'
                  << "h: " << to_string(entry.h) << '\n';
    }
    return 0;
}

int cmd_sequence(const std::string& kind, u64 limit, const CommonOpts& opts) {
    const VMode mode = mode_of(opts);

    auto emit_records = [&](const std::vector<SequenceRecord>& records) {
        if (opts.json_out) {
            json out = json::array();
            for (const auto& r : records) out.push_back({{"index", r.index}, {"value", r.value}});
            print_json(out);
        } else if (opts.bfile_out) {
            emit_bfile(std::cout, records);
        } else {
            for (const auto& r : records) std::cout << r.value << '\n';
        }
    };

    if (kind == "v") {
        emit_records(gen_v_values(limit, mode));
        return 0;
    }
    if (kind == "vpal") {
        const std::vector<u64> terms = gen_v_palindromic(limit, mode);
        std::vector<SequenceRecord> records;
        records.reserve(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i) records.push_back({i + 1, terms[i]});
        emit_records(records);
        return 0;
    }
    if (kind == "finite-order") {
        const auto dir = cache_dir_of(opts);
        OrderTable table;
        load_order_cache(dir, table);
        const FiniteOrderScan scan = gen_finite_order(limit, opts.scan_cap, table, mode);
        save_order_cache(dir, table);
        if (opts.json_out) {
            print_json({{"terms", scan.finite}, {"undecided", scan.undecided}});
        } else {
            std::vector<SequenceRecord> records;
            records.reserve(scan.finite.size());
            for (std::size_t i = 0; i < scan.finite.size(); ++i) {
                records.push_back({i + 1, scan.finite[i]});
            }
            if (opts.bfile_out) {
                emit_bfile(std::cout, records);
            } else {
                for (const auto& r : records) std::cout << r.value << '\n';
            }
            for (u64 n : scan.undecided) std::cerr << "undecided: " << n << '\n';
        }
        return 0;
    }
    throw std::domain_error("sequence: unknown sequence '" + kind +
                            "' (expected v, vpal, or finite-order)");
}

int cmd_scan(u64 limit, const CommonOpts& opts) {
    const auto dir = cache_dir_of(opts);
    const VMode mode = mode_of(opts);
    OrderTable table;
    load_order_cache(dir, table);
    const DensityReport report = density_scan(limit, opts.scan_cap, table, mode);
    save_order_cache(dir, table);

    if (opts.json_out) {
        print_json({{"limit", report.limit},
                    {"count_s", report.count_s},
                    {"count_t", report.count_t},
                    {"undecided", report.undecided},
                    {"ratio", report.ratio ? json(*report.ratio) : json(nullptr)}});
    } else {
        std::cout << "limit: " << report.limit << '\n'
                  << "|S|: " << report.count_s << '\n'
                  << "|T|: " << report.count_t << '\n';
        if (report.ratio) {
            std::cout << "|T|/|S|: " << std::fixed << std::setprecision(6) << *report.ratio
                      << '\n';
        } else {
            std::cout << "|T|/|S|: n/a\n";
        }
        std::cout << "undecided: " << report.undecided << '\n';
    }
    return 0;
}

int cmd_verify(u64 n, u64 n_max, u64 c_max, const CommonOpts& opts) {
    const auto dir = cache_dir_of(opts);
    const VMode mode = mode_of(opts);
    OrderTable table;
    load_order_cache(dir, table);
    const u64 hi = n_max == 0 ? n : n_max;
    const CrossValidateReport report = cross_validate(n, hi, c_max, table, mode);
    save_order_cache(dir, table);

    if (opts.json_out) {
        json disagreements = json::array();
        for (const auto& d : report.disagreements) {
            disagreements.push_back({{"n", d.n},
                                     {"c", d.c},
                                     {"fast", d.fast},
                                     {"oracle", d.direct_oracle},
                                     {"full_factor", d.full_factor ? json(*d.full_factor)
                                                                   : json(nullptr)}});
        }
        print_json({{"checked", report.checked},
                    {"disagreements", std::move(disagreements)}});
    } else {
        for (const auto& d : report.disagreements) {
            std::cout << d.n << ' ' << d.c << ' ' << (d.fast ? "true" : "false") << ' '
                      << (d.direct_oracle ? "true" : "false") << '\n';
        }
        std::cout << report.disagreements.size() << " disagreements\n";
    }
    return report.clean() ? 0 : 3;
}

void add_common(CLI::App* sub, CommonOpts& opts, bool scanning) {
    sub->add_flag("--json", opts.json_out, "machine-readable JSON output");
    sub->add_flag("--vprime", opts.vprime, "use the always-add-exponent variant of v");
    if (scanning) {
        sub->add_option("--scan-cap", opts.scan_cap,
                        "largest constructive period the scan may materialize")
            ->envname("VPAL_SCAN_CAP")
            ->capture_default_str();
        sub->add_option("--cache-dir", opts.cache_dir,
                        "cache directory (default: VPAL_CACHE_DIR or ~/.cache/vpal)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"v-palindromic repetition calculator"};
    app.require_subcommand(1);

    CommonOpts opts;
    u64 arg_n = 0, arg_lo = 0, arg_hi = 0, arg_p = 0, arg_k = 0;
    u32 arg_alpha = 0;
    u64 arg_limit = 100, arg_nmax = 0, arg_cmax = 100;
    std::string arg_kind;

    auto* sub_v = app.add_subcommand("v", "compute v(n)");
    sub_v->add_option("n", arg_n, "input number")->required();
    add_common(sub_v, opts, false);

    auto* sub_check = app.add_subcommand("check", "decide whether n is v-palindromic");
    sub_check->add_option("n", arg_n, "input number")->required();
    add_common(sub_check, opts, false);

    auto* sub_period = app.add_subcommand(
        "period", "compile the repetition predicate and report omega_f, omega, c");
    sub_period->add_option("n", arg_n, "input number")->required();
    add_common(sub_period, opts, true);

    auto* sub_table = app.add_subcommand("table", "period report for a range of n");
    sub_table->add_option("lo", arg_lo, "lower bound")->required();
    sub_table->add_option("hi", arg_hi, "upper bound")->required();
    sub_table->add_flag("--csv", opts.csv_out, "CSV output");
    add_common(sub_table, opts, true);

    auto* sub_orders = app.add_subcommand("orders", "beta and h for a prime power");
    sub_orders->add_option("p", arg_p, "prime, not 2 or 5")->required();
    sub_orders->add_option("alpha", arg_alpha, "power of p")->required();
    sub_orders->add_option("k", arg_k, "block length")->required();
    sub_orders->add_option("--cache-dir", opts.cache_dir, "cache directory");
    sub_orders->add_flag("--json", opts.json_out, "machine-readable JSON output");

    auto* sub_sequence =
        app.add_subcommand("sequence", "generate a sequence (v, vpal, finite-order)");
    sub_sequence->add_option("kind", arg_kind, "v | vpal | finite-order")->required();
    sub_sequence->add_option("--limit", arg_limit, "inclusive upper bound")
        ->capture_default_str();
    sub_sequence->add_flag("--bfile", opts.bfile_out, "two-column 'index value' output");
    add_common(sub_sequence, opts, true);

    auto* sub_scan = app.add_subcommand("scan", "density of numbers with no valid repetition");
    sub_scan->add_option("limit", arg_limit, "inclusive upper bound")->required();
    add_common(sub_scan, opts, true);

    auto* sub_verify =
        app.add_subcommand("verify", "cross-check the compiled predicate against the oracles");
    sub_verify->add_option("n", arg_n, "first n")->required();
    sub_verify->add_option("--nmax", arg_nmax, "last n (default: n)");
    sub_verify->add_option("--cmax", arg_cmax, "largest repetition count")
        ->capture_default_str();
    add_common(sub_verify, opts, true);

    int rc = 0;
    sub_v->callback([&] { rc = cmd_v(arg_n, opts); });
    sub_check->callback([&] { rc = cmd_check(arg_n, opts); });
    sub_period->callback([&] { rc = cmd_period(arg_n, opts); });
    sub_table->callback([&] { rc = cmd_table(arg_lo, arg_hi, opts); });
    sub_orders->callback([&] { rc = cmd_orders(arg_p, arg_alpha, arg_k, opts); });
    sub_sequence->callback([&] { rc = cmd_sequence(arg_kind, arg_limit, opts); });
    sub_scan->callback([&] { rc = cmd_scan(arg_limit, opts); });
    sub_verify->callback([&] { rc = cmd_verify(arg_n, arg_nmax, arg_cmax, opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const vpal::ScanBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
