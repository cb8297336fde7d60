#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <fermatsha/cache.hpp>
#include <fermatsha/scan.hpp>

using namespace fermatsha;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() /
           ("fermatsha-test-" + std::to_string(::getpid()) + "-" + name);
}

struct FileGuard {
    std::filesystem::path path;
    ~FileGuard() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("scan row for the flagship triple") {
    const OddPrime p19(19);
    const BernoulliTable table = bernoulli_table(p19);
    const ScanRow row = make_scan_row(make_triple(p19, 7, 1), table);
    CHECK(row.p == 19);
    CHECK(row.c == -8);
    CHECK(row.reduction == "tame");
    CHECK(row.gamma == 15);
    CHECK(row.nonsimple);
    CHECK(row.old_verdict == "fails");
    CHECK(row.free_verdict == "holds");
    CHECK(row.nontrivial_verdict == "holds");
    CHECK(row.selmer_dim == 3);
    CHECK(row.rank_bound == 1);
}

TEST_CASE("scan shape and ordering") {
    const OddPrime p5(5);
    const BernoulliTable t5 = bernoulli_table(p5);
    const auto rows = scan_prime(p5, t5, false, 1);
    REQUIRE(rows.size() == 4);
    CHECK(scan_prime(p5, t5, true, 1).size() == 1);
    for (size_t i = 1; i < rows.size(); ++i)
        CHECK(std::pair{rows[i - 1].a, rows[i - 1].b} < std::pair{rows[i].a, rows[i].b});
}

TEST_CASE("CSV output") {
    const OddPrime p19(19);
    const BernoulliTable table = bernoulli_table(p19);
    std::ostringstream out;
    write_scan_csv(scan_prime(p19, table, false, 1), out);
    const std::string text = out.str();
    CHECK(text.starts_with(
        "p,a,b,c,reduction,gamma,nonsimple,old,free,nontrivial,selmer_dim,rank_bound\n"));
    // the flagship orbit appears at its a <= b representative (1, 7, -8)
    CHECK(text.find("19,1,7,-8,tame,15,true,fails,holds,holds,3,1\n") !=
          std::string::npos);
}

TEST_CASE("an empty row set still writes the header") {
    std::ostringstream out;
    write_scan_csv({}, out);
    CHECK(out.str() ==
          "p,a,b,c,reduction,gamma,nonsimple,old,free,nontrivial,selmer_dim,"
          "rank_bound\n");
}

TEST_CASE("irregular primes leave the optional columns empty") {
    const OddPrime p37(37);
    const BernoulliTable table = bernoulli_table(p37);
    const auto rows = scan_prime(p37, table, true, 1);
    REQUIRE_FALSE(rows.empty());
    CHECK_FALSE(rows[0].selmer_dim.has_value());
    CHECK_FALSE(rows[0].rank_bound.has_value());
    std::ostringstream out;
    write_scan_csv({rows[0]}, out);
    const std::string text = out.str();
    CHECK(text.find(",,\n") != std::string::npos);  // two empty trailing fields

    // JSON round-trips the missing values as nulls
    std::ostringstream js;
    write_scan_json(rows, js);
    std::istringstream in(js.str());
    CHECK(read_scan_json(in) == rows);
}

TEST_CASE("parallel scan is byte-identical to serial") {
    const OddPrime p31(31);
    const BernoulliTable table = bernoulli_table(p31);
    std::ostringstream serial, par3, par8;
    write_scan_csv(scan_prime(p31, table, false, 1), serial);
    write_scan_csv(scan_prime(p31, table, false, 3), par3);
    write_scan_csv(scan_prime(p31, table, false, 8), par8);
    CHECK(serial.str() == par3.str());
    CHECK(serial.str() == par8.str());
}

TEST_CASE("JSON round trip is exact") {
    const OddPrime p19(19);
    const BernoulliTable table = bernoulli_table(p19);
    const auto rows = scan_prime(p19, table, false, 2);
    std::ostringstream js;
    write_scan_json(rows, js);
    std::istringstream in(js.str());
    CHECK(read_scan_json(in) == rows);
}

TEST_CASE("cache cold build, warm load") {
    FileGuard guard{temp_file("cache1")};
    const OddPrime p19(19);

    const CacheResult cold = cache_load_or_build(p19, guard.path);
    CHECK_FALSE(cold.from_cache);
    CHECK(std::filesystem::exists(guard.path));

    const CacheResult warm = cache_load_or_build(p19, guard.path);
    CHECK(warm.from_cache);
    CHECK(warm.table.even_values == cold.table.even_values);
    CHECK(warm.table.is_regular == cold.table.is_regular);

    // a second prime appends without disturbing the first
    const CacheResult other = cache_load_or_build(OddPrime(37), guard.path);
    CHECK_FALSE(other.from_cache);
    CHECK(other.table.irregular_indices == std::vector<int64_t>{32});
    CHECK(cache_load_or_build(p19, guard.path).from_cache);
    CHECK(cache_load_or_build(OddPrime(37), guard.path).from_cache);
}

TEST_CASE("truncated cache file rebuilds") {
    FileGuard guard{temp_file("cache2")};
    const OddPrime p19(19);
    cache_load_or_build(p19, guard.path);

    // chop the file mid-record
    const auto size = std::filesystem::file_size(guard.path);
    std::filesystem::resize_file(guard.path, size / 2);

    const CacheResult rebuilt = cache_load_or_build(p19, guard.path);
    CHECK_FALSE(rebuilt.from_cache);
    CHECK(rebuilt.table.at(16) == 15);
    CHECK(cache_load_or_build(p19, guard.path).from_cache);
}

TEST_CASE("version mismatch rebuilds") {
    FileGuard guard{temp_file("cache3")};
    {
        std::ofstream out(guard.path);
        out << kCacheMagic << " 999\nabcdef\n19 1 2 3\n";
    }
    const CacheResult r = cache_load_or_build(OddPrime(19), guard.path);
    CHECK_FALSE(r.from_cache);
    CHECK(r.table.at(16) == 15);
}

TEST_CASE("tampered record fails the checksum and rebuilds") {
    FileGuard guard{temp_file("cache4")};
    cache_load_or_build(OddPrime(19), guard.path);
    {
        std::fstream f(guard.path, std::ios::in | std::ios::out);
        std::string all((std::istreambuf_iterator<char>(f)), {});
        const auto pos = all.rfind("15");
        REQUIRE(pos != std::string::npos);
        f.seekp(static_cast<std::streamoff>(pos));
        f << "14";
    }
    CHECK_FALSE(cache_load_or_build(OddPrime(19), guard.path).from_cache);
}

TEST_CASE("cache path resolution precedence") {
    ::setenv(kCacheEnvVar, "/tmp/from-env.cache", 1);
    CHECK(resolve_cache_path("/tmp/from-flag.cache") == "/tmp/from-flag.cache");
    CHECK(resolve_cache_path("") == "/tmp/from-env.cache");
    ::unsetenv(kCacheEnvVar);
    const auto fallback = resolve_cache_path("");
    CHECK(fallback.string().find("fermat-sha") != std::string::npos);
}
