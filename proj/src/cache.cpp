#include "vpal/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "vpal/version.hpp"

namespace vpal {

namespace {

constexpr const char* kOrdersFile = "orders.txt";
constexpr const char* kResultsFile = "results.csv";
constexpr const char* kResultsHeader = "n,omega_f,omega,order_c,mode,version";

// Advisory lock held for the lifetime of the object.
class FileLock {
public:
    explicit FileLock(const std::filesystem::path& path)
        : fd_(::open(path.c_str(), O_CREAT | O_RDWR, 0644)) {
        if (fd_ >= 0) ::flock(fd_, LOCK_EX);
    }
    ~FileLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_;
};

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string orders_header() {
    return std::string("# vpal orders ") + std::string(kToolVersion);
}

void parse_orders_into(std::istream& in, OrderTable& table) {
    std::string line;
    if (!std::getline(in, line) || line != orders_header()) return;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        u64 p = 0, k = 0;
        u32 alpha = 0, beta = 0;
        std::string h_text;
        if (!(row >> p >> alpha >> k >> beta >> h_text)) continue;
        try {
            table.insert({p, alpha, k}, {beta, parse_u128(h_text)});
        } catch (const std::exception&) {
            continue;
        }
    }
}

}  // namespace

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("VPAL_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "vpal";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "vpal";
    }
    return std::filesystem::path(".vpal-cache");
}

void load_order_cache(const std::filesystem::path& dir, OrderTable& table) {
    std::ifstream in(dir / kOrdersFile);
    if (!in) return;
    parse_orders_into(in, table);
}

void save_order_cache(const std::filesystem::path& dir, const OrderTable& table) {
    std::filesystem::create_directories(dir);
    FileLock lock(dir / (std::string(kOrdersFile) + ".lock"));

    // merge entries another process may have written since our load
    OrderTable merged;
    {
        std::ifstream in(dir / kOrdersFile);
        if (in) parse_orders_into(in, merged);
    }
    for (const auto& [key, entry] : table.snapshot()) merged.insert(key, entry);

    std::ostringstream out;
    out << orders_header() << '\n';
    for (const auto& [key, entry] : merged.snapshot()) {
        out << key.p << ' ' << key.alpha << ' ' << key.k << ' ' << entry.beta << ' '
            << to_string(entry.h) << '\n';
    }
    atomic_write(dir / kOrdersFile, out.str());
}

void ResultCache::load(const std::filesystem::path& dir) {
    std::ifstream in(dir / kResultsFile);
    if (!in) return;
    std::string line;
    if (!std::getline(in, line) || line != kResultsHeader) return;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 6 || fields[5] != kToolVersion) continue;
        const auto mode = parse_vmode(fields[4]);
        if (!mode) continue;
        try {
            ResultRecord rec;
            rec.n = std::stoull(fields[0]);
            rec.omega_f = parse_u128(fields[1]);
            rec.omega = std::stoull(fields[2]);
            if (fields[3] != "inf") rec.order = std::stoull(fields[3]);
            rec.mode = *mode;
            put(rec);
        } catch (const std::exception&) {
            continue;
        }
    }
}

void ResultCache::save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    FileLock lock(dir / (std::string(kResultsFile) + ".lock"));

    ResultCache merged;
    merged.load(dir);
    for (const auto& [key, rec] : records_) merged.records_[key] = rec;

    std::ostringstream out;
    out << kResultsHeader << '\n';
    for (const auto& [key, rec] : merged.records_) {
        out << rec.n << ',' << to_string(rec.omega_f) << ',' << rec.omega << ',';
        if (rec.order) {
            out << *rec.order;
        } else {
            out << "inf";
        }
        out << ',' << to_string(rec.mode) << ',' << kToolVersion << '\n';
    }
    atomic_write(dir / kResultsFile, out.str());
}

std::optional<ResultRecord> ResultCache::lookup(u64 n, VMode mode) const {
    const auto it = records_.find({n, static_cast<int>(mode)});
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::put(const ResultRecord& record) {
    records_[{record.n, static_cast<int>(record.mode)}] = record;
}

}  // namespace vpal
