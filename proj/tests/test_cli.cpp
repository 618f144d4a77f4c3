#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class TempDir {
public:
    TempDir() {
        std::mt19937_64 rng(std::random_device{}());
        path_ = fs::temp_directory_path() / ("vpal-cli-" + std::to_string(rng()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

RunResult run(const std::string& args, const fs::path& work) {
    const fs::path out_file = work / "stdout.txt";
    const fs::path err_file = work / "stderr.txt";
    const std::string cmd = std::string(VPAL_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("v prints the bare value") {
    TempDir tmp;
    const RunResult r = run("v 1", tmp.path());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
    CHECK(run("v 198", tmp.path()).out == "18\n");
    CHECK(run("v 18 --vprime", tmp.path()).out == "8\n");
}

TEST_CASE("v rejects multiples of 10 and out-of-range input") {
    TempDir tmp;
    CHECK(run("v 120", tmp.path()).exit_code == 1);
    CHECK(run("v 0", tmp.path()).exit_code == 1);
    CHECK(run("v 9223372036854775808", tmp.path()).exit_code == 1);
}

TEST_CASE("check reports the verdict and rejects excluded inputs") {
    TempDir tmp;
    const RunResult yes = run("check 198", tmp.path());
    CHECK(yes.exit_code == 0);
    CHECK(yes.out == "v-palindromic: true\n");
    const RunResult no = run("check 12", tmp.path());
    CHECK(no.exit_code == 0);
    CHECK(no.out == "v-palindromic: false\n");
    CHECK(run("check 120", tmp.path()).exit_code == 1);
    CHECK(run("check 121", tmp.path()).exit_code == 1);
}

TEST_CASE("period reports omega_f, omega and c") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult r819 = run("period 819" + cache, tmp.path());
    CHECK(r819.exit_code == 0);
    CHECK(contains(r819.out, "omega_f: 222768"));
    CHECK(contains(r819.out, "omega: 24752"));
    CHECK(contains(r819.out, "c: 1"));

    const RunResult r18 = run("period 18" + cache, tmp.path());
    CHECK(contains(r18.out, "omega_f: 9"));
    CHECK(contains(r18.out, "omega: 1"));

    const RunResult r12 = run("period 12" + cache, tmp.path());
    CHECK(contains(r12.out, "c: inf"));
}

TEST_CASE("period exceeding the scan cap exits 2") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult r = run("period 17 --scan-cap 1000" + cache, tmp.path());
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "scan budget exceeded"));
    CHECK(contains(r.err, "337960"));
}

TEST_CASE("json and text output carry the same values") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult text = run("period 819" + cache, tmp.path());
    const RunResult json = run("period 819 --json" + cache, tmp.path());
    CHECK(json.exit_code == 0);
    CHECK(contains(json.out, "\"omega_f\": 222768"));
    CHECK(contains(json.out, "\"omega\": 24752"));
    CHECK(contains(json.out, "\"c\": 1"));
    CHECK(contains(text.out, "omega_f: 222768"));

    const RunResult jinf = run("period 12 --json" + cache, tmp.path());
    CHECK(contains(jinf.out, "\"c\": null"));
}

TEST_CASE("table emits one row per ascending non-palindrome") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult r = run("table 12 56 --csv" + cache, tmp.path());
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,omega_f,omega,c");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 27);
    CHECK(contains(r.out, "12,21,1,inf\n"));
    CHECK(contains(r.out, "17,337960,337960,280\n"));
    CHECK(contains(r.out, "37,32412,32412,12\n"));
    CHECK(contains(r.out, "49,22701,22701,3243\n"));
    CHECK(contains(r.out, "56,273,273,3\n"));
}

TEST_CASE("table output is byte-identical across cold and warm cache runs") {
    TempDir tmp;
    const fs::path cache_dir = tmp.path() / "cache";
    const std::string cache = " --cache-dir " + cache_dir.string();
    const RunResult cold = run("table 12 40 --csv" + cache, tmp.path());
    CHECK(cold.exit_code == 0);
    CHECK(fs::exists(cache_dir / "orders.txt"));
    CHECK(fs::exists(cache_dir / "results.csv"));
    const RunResult warm = run("table 12 40 --csv" + cache, tmp.path());
    CHECK(warm.out == cold.out);
    fs::remove_all(cache_dir);
    const RunResult cold2 = run("table 12 40 --csv" + cache, tmp.path());
    CHECK(cold2.out == cold.out);
}

TEST_CASE("a cached result is ignored when the scan cap no longer admits it") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    CHECK(run("period 17" + cache, tmp.path()).exit_code == 0);
    // same query under a tighter cap must fail exactly like a cold run
    CHECK(run("period 17 --scan-cap 1000" + cache, tmp.path()).exit_code == 2);
}

TEST_CASE("orders prints beta and h") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult r = run("orders 7 2 3" + cache, tmp.path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "h: 14"));
    CHECK(contains(r.out, "beta: 0"));
    CHECK(contains(run("orders 17 1 3" + cache, tmp.path()).out, "h: 16"));
    const RunResult r3 = run("orders 3 1 1" + cache, tmp.path());
    CHECK(contains(r3.out, "beta: 2"));
    CHECK(contains(r3.out, "h: 3"));
    CHECK(run("orders 2 1 3" + cache, tmp.path()).exit_code == 1);
    CHECK(run("orders 5 1 3" + cache, tmp.path()).exit_code == 1);
}

TEST_CASE("orders cache file holds plain text rows") {
    TempDir tmp;
    const fs::path cache_dir = tmp.path() / "cache";
    const std::string cache = " --cache-dir " + cache_dir.string();
    run("orders 7 2 3" + cache, tmp.path());
    const std::string cached = slurp(cache_dir / "orders.txt");
    CHECK(contains(cached, "7 2 3 0 14"));
}

TEST_CASE("sequence vpal bfile starts at 18") {
    TempDir tmp;
    const RunResult r = run("sequence vpal --limit 1000 --bfile", tmp.path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1 18\n2 81\n3 198\n"));
}

TEST_CASE("sequence v lists the first values") {
    TempDir tmp;
    const RunResult r = run("sequence v --limit 5", tmp.path());
    CHECK(r.out == "0\n2\n3\n4\n5\n");
    const RunResult b = run("sequence v --limit 3 --bfile", tmp.path());
    CHECK(b.out == "1 0\n2 2\n3 3\n");
}

TEST_CASE("sequence finite-order under a tight cap reports undecided on stderr") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult r = run("sequence finite-order --limit 20 --scan-cap 100" + cache,
                            tmp.path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "18\n"));
    CHECK(contains(r.err, "undecided: 17"));
    CHECK(run("sequence nope --limit 5", tmp.path()).exit_code == 1);
}

TEST_CASE("scan prints the density report") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult r = run("scan 56" + cache, tmp.path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "|S|: 27"));
    CHECK(contains(r.out, "|T|: 17"));
    const RunResult r10 = run("scan 10" + cache, tmp.path());
    CHECK(contains(r10.out, "|S|: 0"));
    CHECK(contains(r10.out, "n/a"));
}

TEST_CASE("verify reports disagreements and exits cleanly when there are none") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path() / "cache").string();
    const RunResult r = run("verify 819 --cmax 2000" + cache, tmp.path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0 disagreements"));
    const RunResult sweep = run("verify 11 --nmax 99 --cmax 30" + cache, tmp.path());
    CHECK(sweep.exit_code == 0);
    CHECK(contains(sweep.out, "0 disagreements"));
}

TEST_CASE("cache dir can come from the environment") {
    TempDir tmp;
    const fs::path cache_dir = tmp.path() / "env-cache";
    setenv("VPAL_CACHE_DIR", cache_dir.c_str(), 1);
    const RunResult r = run("orders 7 1 3", tmp.path());
    unsetenv("VPAL_CACHE_DIR");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(cache_dir / "orders.txt"));
}

TEST_CASE("help exits zero") {
    TempDir tmp;
    CHECK(run("--help", tmp.path()).exit_code == 0);
    CHECK(run("period --help", tmp.path()).exit_code == 0);
    CHECK(run("", tmp.path()).exit_code == 1);  // a subcommand is required
}
