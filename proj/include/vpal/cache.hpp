#pragma once

#include <filesystem>
#include <map>
#include <optional>

#include "vpal/predicate.hpp"

namespace vpal {

// On-disk caches are plain text, tagged with the tool version; entries
// written by a different version are ignored on load. Writes go through a
// lock file plus rename so concurrent runs cannot interleave.

/// VPAL_CACHE_DIR, else XDG_CACHE_HOME/vpal, else ~/.cache/vpal.
std::filesystem::path default_cache_dir();

/// Reads dir/orders.txt ("p alpha k beta h" lines) into the table. Missing
/// or version-mismatched files are simply skipped.
void load_order_cache(const std::filesystem::path& dir, OrderTable& table);

/// Merges the table's snapshot with whatever is on disk and rewrites
/// dir/orders.txt atomically.
void save_order_cache(const std::filesystem::path& dir, const OrderTable& table);

struct ResultRecord {
    u64 n = 0;
    u128 omega_f = 1;
    u64 omega = 1;
    std::optional<u64> order;
    VMode mode = VMode::standard;
};

/// Period results keyed by (n, mode), persisted as dir/results.csv.
class ResultCache {
public:
    void load(const std::filesystem::path& dir);
    void save(const std::filesystem::path& dir) const;

    std::optional<ResultRecord> lookup(u64 n, VMode mode) const;
    void put(const ResultRecord& record);

private:
    std::map<std::pair<u64, int>, ResultRecord> records_;
};

}  // namespace vpal
